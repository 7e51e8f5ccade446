"""Monomials and monomial ideals in a standard graded polynomial ring.

A monomial is a tuple of non-negative exponents, one per variable.  All
deterministic listings use lexicographic order with ``x_1 > ... > x_m``,
i.e. exponent tuples sorted in decreasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

Monomial = tuple[int, ...]

MAX_VARS = 16


def degree(mu: Monomial) -> int:
    return sum(mu)


def one(m: int) -> Monomial:
    return (0,) * m


def variable(j: int, m: int) -> Monomial:
    return tuple(1 if k == j else 0 for k in range(m))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def support(mu: Monomial) -> frozenset[int]:
    return frozenset(j for j, e in enumerate(mu) if e)


def lex_key(mu: Monomial) -> tuple[int, ...]:
    return tuple(-e for e in mu)


def _check_nvars(m: int) -> None:
    if not 1 <= m <= MAX_VARS:
        raise InputError(f"variable count must lie in [1, {MAX_VARS}], got {m}")


@lru_cache(maxsize=1024)
def monomials_of_degree(m: int, e: int) -> tuple[Monomial, ...]:
    """All degree-``e`` monomials in ``m`` variables, lex-decreasing."""
    if e < 0:
        return ()
    if m == 1:
        return ((e,),)
    out = []
    for first in range(e, -1, -1):
        for rest in monomials_of_degree(m - 1, e - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=1024)
def _monomial_array(m: int, e: int) -> np.ndarray:
    arr = np.array(monomials_of_degree(m, e), dtype=np.int64).reshape(-1, m)
    arr.setflags(write=False)
    return arr


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sorting by degree first means only earlier entries can divide later ones
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda mu: (degree(mu), lex_key(mu))):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lex_key))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by the
    constant monomial.
    """

    nvars: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        _check_nvars(self.nvars)
        for g in self.gens:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise InputError(f"bad exponent vector {g!r} for {self.nvars} variables")
        object.__setattr__(self, "gens", _minimal(tuple(g) for g in self.gens))

    @classmethod
    def zero(cls, m: int) -> MonomialIdeal:
        return cls(m, ())

    @classmethod
    def unit(cls, m: int) -> MonomialIdeal:
        return cls(m, (one(m),))

    @classmethod
    def maximal(cls, m: int) -> MonomialIdeal:
        return cls(m, tuple(variable(j, m) for j in range(m)))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return one(self.nvars) in self.gens

    def __contains__(self, mu: Monomial) -> bool:
        return any(divides(g, mu) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def _same_ring(self, other: MonomialIdeal) -> None:
        if self.nvars != other.nvars:
            raise InputError(f"ambient mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same_ring(other)
        return MonomialIdeal(self.nvars, tuple(mul(a, b) for a in self.gens for b in other.gens))

    def times(self, mu: Monomial) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, tuple(mul(g, mu) for g in self.gens))

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(g in self for g in other.gens)

    def degrees(self) -> list[int]:
        return [degree(g) for g in self.gens]

    def lcm(self) -> Monomial:
        out = one(self.nvars)
        for g in self.gens:
            out = lcm(out, g)
        return out

    def __str__(self) -> str:
        return format_ideal(self)


def minimalize(gens: Sequence[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by ``gens``."""
    gens = [tuple(g) for g in gens]
    sizes = {len(g) for g in gens}
    if nvars is not None:
        sizes.add(nvars)
    if len(sizes) > 1:
        raise InputError(f"mixed ambient sizes {sorted(sizes)}")
    if not sizes:
        raise InputError("cannot infer the variable count of an empty generator list")
    return MonomialIdeal(sizes.pop(), tuple(gens))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise InputError(f"negative power {n}")
    return _power(I, n)


@lru_cache(maxsize=512)
def _power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n == 0:
        return MonomialIdeal.unit(I.nvars)
    if n == 1:
        return I
    # reuse the cached lower power; minimalizing incrementally keeps lists short
    return _power(I, n - 1) * I


def power_by_products(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^n`` straight from its definition: products of ``n`` generators."""
    if n == 0:
        return MonomialIdeal.unit(I.nvars)
    prods = []
    for combo in combinations_with_replacement(I.gens, n):
        mu = one(I.nvars)
        for g in combo:
            mu = mul(mu, g)
        prods.append(mu)
    return MonomialIdeal(I.nvars, tuple(prods))


def colon(q: MonomialIdeal, g: MonomialIdeal) -> MonomialIdeal:
    """``q : g``, the monomials sending every generator of ``g`` into ``q``."""
    q._same_ring(g)
    out = MonomialIdeal.unit(q.nvars)
    for gamma in g.gens:
        out = intersect(out, MonomialIdeal(q.nvars, tuple(quotient(h, gamma) for h in q.gens)))
    return out


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    a._same_ring(b)
    return MonomialIdeal(a.nvars, tuple(lcm(x, y) for x in a.gens for y in b.gens))


def generated_upto(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """Subideal generated by the minimal generators of degree at most ``d``."""
    return MonomialIdeal(I.nvars, tuple(g for g in I.gens if degree(g) <= d))


def maximal_power(m: int, k: int) -> MonomialIdeal:
    """``(x_1, ..., x_m)^k``; the unit ideal for ``k <= 0``."""
    if k <= 0:
        return MonomialIdeal.unit(m)
    return MonomialIdeal(m, monomials_of_degree(m, k))


def member_mask(I: MonomialIdeal, mons: np.ndarray) -> np.ndarray:
    """Boolean mask of the rows of ``mons`` lying in ``I``."""
    if not I.gens or mons.shape[0] == 0:
        return np.zeros(mons.shape[0], dtype=bool)
    G = np.array(I.gens, dtype=np.int64)
    return np.any(np.all(mons[:, None, :] >= G[None, :, :], axis=2), axis=1)


def degree_slice(g: MonomialIdeal, q: MonomialIdeal, e: int) -> list[Monomial]:
    """Degree-``e`` monomials in ``g`` but not in ``q``, lex-decreasing."""
    g._same_ring(q)
    if e < 0 or g.is_zero():
        return []
    mons = _monomial_array(g.nvars, e)
    keep = member_mask(g, mons) & ~member_mask(q, mons)
    every = monomials_of_degree(g.nvars, e)
    return [every[i] for i in np.flatnonzero(keep)]


def format_monomial(mu: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or _default_names(len(mu))
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mu) if e]
    return "*".join(parts) or "1"


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"


def _default_names(m: int) -> list[str]:
    if m <= 3:
        return list("xyz"[:m])
    return [f"x{j + 1}" for j in range(m)]
