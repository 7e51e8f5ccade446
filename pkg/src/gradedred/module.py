"""Graded modules that are direct sums of shifted monomial subquotients.

A module is ``M = sum_i ((g_i + q_i) / q_i)(-a_i)`` for monomial ideals
``g_i`` (numerator) and ``q_i`` (denominator).  The class is closed under
``I^n M``, truncation, shifts, direct sums and quotients by monomial
submodules, and every graded piece has an explicit monomial basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple, Sequence

from . import monomial as mon
from .errors import InputError, ZeroModuleError
from .linalg import DEFAULT_PRIME, PrimeField
from .monomial import Monomial, MonomialIdeal

# Krull dimension of the zero module
NEG_INF = -math.inf


@dataclass(frozen=True)
class Component:
    """The summand ``((g + q) / q)(-shift)``."""

    shift: int
    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self):
        if self.numerator.nvars != self.denominator.nvars:
            raise InputError("numerator and denominator live in different rings")

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return self.denominator.contains_ideal(self.numerator)

    def annihilator(self) -> MonomialIdeal:
        return mon.colon(self.denominator, self.numerator)


class BasisElement(NamedTuple):
    component: int
    monomial: Monomial


@dataclass(frozen=True)
class GradedModule:
    nvars: int
    components: tuple[Component, ...]
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        PrimeField(self.p)
        object.__setattr__(self, "components", tuple(self.components))
        for c in self.components:
            if c.nvars != self.nvars:
                raise InputError(f"component in {c.nvars} variables, module in {self.nvars}")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def shift(self, p: int) -> GradedModule:
        """``M(-p)``: every degree goes up by ``p``."""
        return shift_and_sum([(self, p)])

    def __str__(self) -> str:
        parts = []
        for c in self.components:
            num = "S" if c.numerator.is_unit() else str(c.numerator)
            piece = num if c.denominator.is_zero() else f"{num}/{c.denominator}"
            parts.append(f"{piece}(-{c.shift})" if c.shift else piece)
        return " + ".join(parts) or "0"


def free(m: int, shift: int = 0, p: int = DEFAULT_PRIME) -> GradedModule:
    """The rank-one free module ``S(-shift)``."""
    return cyclic(MonomialIdeal.zero(m), shift=shift, p=p)


def cyclic(q: MonomialIdeal, shift: int = 0, p: int = DEFAULT_PRIME) -> GradedModule:
    """``(S / q)(-shift)``."""
    return GradedModule(q.nvars, (Component(shift, MonomialIdeal.unit(q.nvars), q),), p)


def ideal_module(g: MonomialIdeal, q: MonomialIdeal | None = None, shift: int = 0,
                 p: int = DEFAULT_PRIME) -> GradedModule:
    """``((g + q) / q)(-shift)``; ``q`` defaults to the zero ideal."""
    q = MonomialIdeal.zero(g.nvars) if q is None else q
    return GradedModule(g.nvars, (Component(shift, g, q),), p)


def _require_nonzero(M: GradedModule) -> None:
    if M.is_zero():
        raise ZeroModuleError("undefined on zero module")


@lru_cache(maxsize=8192)
def basis(M: GradedModule, e: int) -> tuple[BasisElement, ...]:
    """Monomial basis of ``M_e``: component order, then lex order."""
    out = []
    for i, c in enumerate(M.components):
        for mu in mon.degree_slice(c.numerator, c.denominator, e - c.shift):
            out.append(BasisElement(i, mu))
    return tuple(out)


@lru_cache(maxsize=8192)
def basis_index(M: GradedModule, e: int) -> dict[BasisElement, int]:
    return {b: k for k, b in enumerate(basis(M, e))}


def hilbert_value(M: GradedModule, e: int) -> int:
    return len(basis(M, e))


def ideal_power_module(I: MonomialIdeal, n: int, M: GradedModule) -> GradedModule:
    """``I^n M``, computed component-wise as ``(I^n g_i + q_i) / q_i``."""
    if I.nvars != M.nvars:
        raise InputError("ideal and module live in different rings")
    if n == 0:
        return M
    In = mon.power(I, n)
    comps = tuple(replace(c, numerator=In * c.numerator) for c in M.components)
    return GradedModule(M.nvars, comps, M.p)


def min_generators(M: GradedModule) -> list[BasisElement]:
    out = []
    for i, c in enumerate(M.components):
        for mu in c.numerator.gens:
            if mu not in c.denominator:
                out.append(BasisElement(i, mu))
    return out


def generator_degrees(M: GradedModule) -> list[int]:
    return [mon.degree(b.monomial) + M.components[b.component].shift for b in min_generators(M)]


def largest_gen_degree(M: GradedModule) -> int:
    """``D(M)``, the top degree of a minimal generating system."""
    _require_nonzero(M)
    return max(generator_degrees(M))


def least_degree(M: GradedModule) -> int:
    """``d(M)``, the lowest nonvanishing degree."""
    _require_nonzero(M)
    return min(generator_degrees(M))


def component_dim(c: Component) -> int | float:
    """Krull dimension of one summand via the support of its annihilator."""
    if c.is_zero():
        return NEG_INF
    ann = c.annihilator()
    supports = [mon.support(g) for g in ann.gens]
    for size in range(c.nvars, -1, -1):
        for Z in combinations(range(c.nvars), size):
            Z = frozenset(Z)
            if not any(s <= Z for s in supports):
                return size
    return NEG_INF  # unreachable: a nonzero component has a proper annihilator


def krull_dim(M: GradedModule) -> int | float:
    """Krull dimension; ``NEG_INF`` for the zero module."""
    return max((component_dim(c) for c in M.components), default=NEG_INF)


def truncate_at(M: GradedModule, n: int) -> GradedModule:
    """``M_{>=n}``."""
    comps = []
    for c in M.components:
        cut = mon.maximal_power(M.nvars, n - c.shift)
        comps.append(replace(c, numerator=mon.intersect(c.numerator, cut)))
    return GradedModule(M.nvars, tuple(comps), M.p)


def shift_and_sum(parts: Sequence[tuple[GradedModule, int]]) -> GradedModule:
    """``sum_j N_j(-p_j)`` for pairs ``(N_j, p_j)``."""
    if not parts:
        raise InputError("empty direct sum")
    m, p = parts[0][0].nvars, parts[0][0].p
    comps = []
    for N, shift in parts:
        if N.nvars != m or N.p != p:
            raise InputError("direct summands must share ring and field")
        comps.extend(replace(c, shift=c.shift + shift) for c in N.components)
    return GradedModule(m, tuple(comps), p)


def direct_sum(*mods: GradedModule) -> GradedModule:
    return shift_and_sum([(N, 0) for N in mods])


def _check_elements(M: GradedModule, elems: Sequence[BasisElement]) -> None:
    for i, mu in elems:
        if not 0 <= i < len(M.components):
            raise InputError(f"no component {i}")
        c = M.components[i]
        if len(mu) != M.nvars or mu not in c.numerator:
            raise InputError(f"{mu!r} is not an element of component {i}")


def quotient_by_elements(M: GradedModule, elems: Sequence[BasisElement]) -> GradedModule:
    """``M / N`` where ``N`` is generated by the given monomial elements."""
    _check_elements(M, elems)
    comps = list(M.components)
    for i, mu in elems:
        c = comps[i]
        comps[i] = replace(c, denominator=c.denominator + MonomialIdeal(M.nvars, (tuple(mu),)))
    return GradedModule(M.nvars, tuple(comps), M.p)


def submodule_by_elements(M: GradedModule, elems: Sequence[BasisElement]) -> GradedModule:
    """The submodule generated by the given monomial elements, as a module in the class."""
    _check_elements(M, elems)
    chosen: list[list[Monomial]] = [[] for _ in M.components]
    for i, mu in elems:
        chosen[i].append(tuple(mu))
    comps = tuple(
        replace(c, numerator=MonomialIdeal(M.nvars, tuple(chosen[i])))
        for i, c in enumerate(M.components)
    )
    return GradedModule(M.nvars, comps, M.p)


def quotient_by_ideal_power(I: MonomialIdeal, n: int, M: GradedModule) -> GradedModule:
    """``M / I^n M`` via denominators ``q_i + I^n g_i``."""
    In = mon.power(I, n)
    comps = tuple(
        replace(c, denominator=c.denominator + In * c.numerator) for c in M.components
    )
    return GradedModule(M.nvars, comps, M.p)


def top_degree(M: GradedModule) -> int:
    """Largest ``e`` with ``M_e != 0``; ``M`` must have finite length.

    Past ``D(M)`` the module is generated in the current degree, so the
    first vanishing piece certifies vanishing beyond it.
    """
    _require_nonzero(M)
    if krull_dim(M) != 0:
        raise InputError("module does not have finite length")
    e = largest_gen_degree(M)
    while hilbert_value(M, e + 1):
        e += 1
    return e


def nonzero_components(M: GradedModule) -> GradedModule:
    return GradedModule(M.nvars, tuple(c for c in M.components if not c.is_zero()), M.p)
