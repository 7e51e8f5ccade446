"""Random monomial modules and the fixed instance corpus."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import monomial as mon
from .linalg import DEFAULT_PRIME
from .module import Component, GradedModule, cyclic, direct_sum, free, krull_dim
from .monomial import MonomialIdeal


def random_monomial(rng: np.random.Generator, m: int, deg: int) -> tuple[int, ...]:
    cuts = np.sort(rng.integers(0, deg + 1, size=m - 1))
    parts = np.diff(np.concatenate([[0], cuts, [deg]]))
    return tuple(int(x) for x in parts)


def random_ideal(rng: np.random.Generator, m: int, max_gens: int = 3, min_deg: int = 1,
                 max_deg: int = 4) -> MonomialIdeal:
    k = int(rng.integers(1, max_gens + 1))
    gens = [random_monomial(rng, m, int(rng.integers(min_deg, max_deg + 1))) for _ in range(k)]
    return MonomialIdeal(m, tuple(gens))


def random_component(rng: np.random.Generator, m: int) -> Component:
    shift = int(rng.integers(-1, 3))
    if rng.random() < 0.5:
        g = MonomialIdeal.unit(m)
    else:
        g = random_ideal(rng, m, max_gens=2, min_deg=0, max_deg=2)
    q = MonomialIdeal.zero(m) if rng.random() < 0.2 else random_ideal(rng, m, max_deg=4)
    return Component(shift, g, q)


def random_module(rng: np.random.Generator, nvars: int | None = None, max_components: int = 3,
                  p: int = DEFAULT_PRIME) -> GradedModule:
    """A nonzero module with <= 3 variables, <= ``max_components`` summands and
    generator degrees <= 4."""
    m = nvars or int(rng.integers(1, 4))
    while True:
        k = int(rng.integers(1, max_components + 1))
        comps = tuple(random_component(rng, m) for _ in range(k))
        comps = tuple(c for c in comps if not c.is_zero())
        if comps:
            return GradedModule(m, comps, p)


def random_module_of_dim(rng: np.random.Generator, dim: int, m: int,
                         max_components: int = 2, tries: int = 500) -> GradedModule | None:
    for _ in range(tries):
        M = random_module(rng, nvars=m, max_components=max_components)
        if krull_dim(M) == dim:
            return M
    return None


@dataclass(frozen=True)
class Instance:
    name: str
    I: MonomialIdeal
    M: GradedModule


def _ideal(m: int, *gens) -> MonomialIdeal:
    return MonomialIdeal(m, tuple(tuple(g) for g in gens))


def corpus(p: int = DEFAULT_PRIME) -> list[Instance]:
    """Instances exercising the asymptotic statements.

    The later ones have ``dim M`` below the number of variables, so generic
    reductions are proper and ``r`` can exceed ``D``.
    """
    m2 = mon.maximal_power(2, 2)
    S2, S3 = free(2, p=p), free(3, p=p)
    two = direct_sum(cyclic(_ideal(2, (2, 0)), p=p), cyclic(_ideal(2, (0, 3)), shift=1, p=p))
    return [
        Instance("m^2 on S", m2, S2),
        Instance("(x^2,y^3) on S", _ideal(2, (2, 0), (0, 3)), S2),
        Instance("(x^2,xy,y^3) on S", _ideal(2, (2, 0), (1, 1), (0, 3)), S2),
        Instance("m^2 on S/(xy)", m2, cyclic(_ideal(2, (1, 1)), p=p)),
        Instance("(x^2,yz) on K[x,y,z]/(xy^2)", _ideal(3, (2, 0, 0), (0, 1, 1)),
                 cyclic(_ideal(3, (1, 2, 0)), p=p)),
        Instance("(x,y^2) on S/(x^2) + S/(y^3)(-1)", _ideal(2, (1, 0), (0, 2)), two),
        Instance("m on K[x,y,z]/(xyz)", mon.maximal_power(3, 1), cyclic(_ideal(3, (1, 1, 1)), p=p)),
        Instance("(x^2,y^2,xyz) on K[x,y,z]", _ideal(3, (2, 0, 0), (0, 2, 0), (1, 1, 1)), S3),
    ]
