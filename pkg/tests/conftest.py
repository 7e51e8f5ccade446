from itertools import product

import pytest

from gradedred.monomial import MonomialIdeal


def monomials_up_to(m, top):
    """Every exponent vector of total degree <= top (brute-force scan domain)."""
    return [mu for mu in product(range(top + 1), repeat=m) if sum(mu) <= top]


def brute_member(gens, mu):
    return any(all(a <= b for a, b in zip(g, mu)) for g in gens)


def ideal(*gens):
    return MonomialIdeal(len(gens[0]), tuple(gens))


@pytest.fixture
def S2():
    from gradedred.module import free

    return free(2)
