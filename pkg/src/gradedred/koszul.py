"""Koszul complexes: Betti numbers, regularity, and the truncated Koszul
complex on the generators of a reduction of ``I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from . import monomial as mon
from .errors import InputError
from .linalg import matmul, rank
from .module import (
    Component,
    GradedModule,
    basis,
    hilbert_value,
    ideal_power_module,
    largest_gen_degree,
    least_degree,
    _require_nonzero,
)
from .monomial import Monomial, MonomialIdeal
from .reduction import DEFAULT_K_MAX, is_reduction_of_ideal


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]``; absent keys are zero."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[i, j] = self.entries.get((i, j), 0) + value

    def nonzero(self) -> dict[tuple[int, int], int]:
        return dict(sorted(self.entries.items()))

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def euler(self, j: int) -> int:
        return sum((-1) ** i * b for (i, jj), b in self.entries.items() if jj == j)

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": b for (i, j), b in self.nonzero().items()}


def taylor_bound(M: GradedModule) -> int:
    """Degree beyond which every Koszul homology group of ``M`` vanishes."""
    return max(c.shift + mon.degree(_component_lcm(c)) for c in M.components if not c.is_zero())


def _component_lcm(c: Component) -> Monomial:
    return mon.lcm(c.numerator.lcm(), c.denominator.lcm())


def _component_betti(c: Component, p: int, table: BettiTable) -> None:
    # The Koszul complex on the variables is Z^m-graded.  In multidegree
    # alpha its stage-i space has basis {T : |T| = i, alpha - e_T in g \ q}
    # and every Betti multidegree divides the lcm of all generators.
    m = c.nvars
    top = _component_lcm(c)
    alive_cache: dict[Monomial, bool] = {}

    def alive(mu: Monomial) -> bool:
        if mu not in alive_cache:
            alive_cache[mu] = mu in c.numerator and mu not in c.denominator
        return alive_cache[mu]

    for alpha in product(*(range(t + 1) for t in top)):
        supp = [j for j in range(m) if alpha[j]]
        stages = []
        for i in range(len(supp) + 1):
            cells = []
            for T in combinations(supp, i):
                mu = tuple(a - (1 if j in T else 0) for j, a in enumerate(alpha))
                if alive(mu):
                    cells.append(T)
            stages.append(cells)
        if not any(stages):
            continue
        ranks = [0] * (len(stages) + 1)
        for i in range(1, len(stages)):
            ranks[i] = rank(_koszul_block(stages[i], stages[i - 1]), p)
        j = sum(alpha) + c.shift
        for i, cells in enumerate(stages):
            table.add(i, j, len(cells) - ranks[i] - ranks[i + 1])


def _koszul_block(src: list[tuple[int, ...]], dst: list[tuple[int, ...]]) -> np.ndarray:
    """Matrix (rows = source cells) of ``e_T -> sum_k (-1)^k x_{T_k} e_{T - T_k}``."""
    A = np.zeros((len(src), len(dst)), dtype=np.int64)
    if A.size == 0:
        return A
    where = {T: k for k, T in enumerate(dst)}
    for r, T in enumerate(src):
        for k in range(len(T)):
            col = where.get(T[:k] + T[k + 1:])
            if col is not None:
                A[r, col] = -1 if k % 2 else 1
    return A


def betti_table(M: GradedModule) -> BettiTable:
    _require_nonzero(M)
    table = BettiTable()
    for c in M.components:
        if not c.is_zero():
            _component_betti(c, M.p, table)
    return table


def regularity(M: GradedModule) -> int:
    return betti_table(M).regularity()


def koszul_homology_dim(M: GradedModule, i: int, j: int) -> int:
    """``dim H_i(x; M)_j`` straight from the singly graded Koszul complex.

    Slow reference route used to cross-check :func:`betti_table`.
    """
    m = M.nvars

    def space(k: int) -> list[tuple[tuple[int, ...], object]]:
        if k < 0 or k > m:
            return []
        return [(T, b) for T in combinations(range(m), k) for b in basis(M, j - k)]

    def diff(k: int) -> np.ndarray:
        src, dst = space(k), space(k - 1)
        A = np.zeros((len(src), len(dst)), dtype=np.int64)
        if A.size == 0:
            return A
        where = {cell: n for n, cell in enumerate(dst)}
        for r, (T, (ci, mu)) in enumerate(src):
            for pos, x in enumerate(T):
                nu = mu[:x] + (mu[x] + 1,) + mu[x + 1:]
                col = where.get((T[:pos] + T[pos + 1:], (ci, nu)))
                if col is not None:
                    A[r, col] = (-1) ** pos
        return A

    dim = len(space(i))
    return dim - rank(diff(i), M.p) - rank(diff(i + 1), M.p)


@dataclass
class ExactnessRow:
    n: int
    degree: int
    stage: int
    passed: bool


@dataclass
class ExactnessReport:
    u: list[Monomial]
    rows: list[ExactnessRow] = field(default_factory=list)
    dd_zero: bool = True
    threshold: int | None = None

    def passed(self, n: int | None = None) -> bool:
        rows = self.rows if n is None else [r for r in self.rows if r.n == n]
        return self.dd_zero and all(r.passed for r in rows)

    def tested_n(self) -> list[int]:
        return sorted({r.n for r in self.rows})

    def to_csv_rows(self) -> list[str]:
        return [f"{r.n},{r.degree},{r.stage},{int(r.passed)}" for r in self.rows]


def _subcomplex_spaces(I: MonomialIdeal, M: GradedModule, u: list[Monomial], n: int, e: int):
    t = len(u)
    p_of = [mon.degree(x) for x in u]
    out = []
    for i in range(t + 1):
        N = ideal_power_module(I, n - i, M)
        cells = []
        for T in combinations(range(t), i):
            for b in basis(N, e - sum(p_of[k] for k in T)):
                cells.append((T, b))
        out.append(cells)
    return out


def _subcomplex_diff(src, dst, u: list[Monomial]) -> np.ndarray:
    A = np.zeros((len(src), len(dst)), dtype=np.int64)
    if A.size == 0:
        return A
    where = {cell: k for k, cell in enumerate(dst)}
    for r, (T, (ci, mu)) in enumerate(src):
        for pos, k in enumerate(T):
            col = where.get((T[:pos] + T[pos + 1:], (ci, mon.mul(u[k], mu))))
            # a missing target means u_k * mu fell into the denominator
            if col is not None:
                A[r, col] = -1 if pos % 2 else 1
    return A


def check_subcomplex(I: MonomialIdeal, M: GradedModule, u: list[Monomial], n: int,
                     degrees, report: ExactnessReport) -> None:
    t = len(u)
    if n < t:
        raise InputError(f"need n >= {t} for the truncated Koszul complex")
    for e in degrees:
        spaces = _subcomplex_spaces(I, M, u, n, e)
        diffs = [None] + [_subcomplex_diff(spaces[i], spaces[i - 1], u) for i in range(1, t + 1)]
        for i in range(2, t + 1):
            if diffs[i].size and diffs[i - 1].size:
                if np.any(matmul(diffs[i], diffs[i - 1], M.p)):
                    report.dd_zero = False
        ranks = [0] + [rank(diffs[i], M.p) for i in range(1, t + 1)] + [0]
        for i in range(t + 1):
            # homology at stage i: dim - rank(out) - rank(in); stage 0 maps to 0
            h = len(spaces[i]) - ranks[i] - ranks[i + 1]
            report.rows.append(ExactnessRow(n, e, i, h == 0))


def default_degree_window(I: MonomialIdeal, M: GradedModule, u: list[Monomial], n: int) -> range:
    In_M = ideal_power_module(I, n, M)
    top = largest_gen_degree(M if In_M.is_zero() else In_M)
    return range(least_degree(M), top + sum(mon.degree(x) for x in u) + 3)


def subcomplex_exactness(I: MonomialIdeal, M: GradedModule, u: list[Monomial], n_values,
                         degree_window=None, k_max: int = DEFAULT_K_MAX) -> ExactnessReport:
    """Check the truncated Koszul complex on ``u`` for each ``n`` in ``n_values``.

    ``threshold`` is the least tested ``n`` from which every larger tested
    ``n`` passes, or ``None`` if the largest one fails.
    """
    u = [tuple(x) for x in u]
    Jm = MonomialIdeal(I.nvars, tuple(u))
    if sorted(Jm.gens) != sorted(set(u)) or len(set(u)) != len(u):
        raise InputError("u must be a minimal generating set")
    if not is_reduction_of_ideal(Jm, I, M, k_max):
        raise InputError(f"{Jm} is not a reduction of {I} relative to M")
    if isinstance(n_values, int):
        n_values = [n_values]
    report = ExactnessReport(u)
    for n in n_values:
        window = degree_window if degree_window is not None else default_degree_window(I, M, u, n)
        check_subcomplex(I, M, u, n, window, report)
    threshold = None
    for n in sorted(set(n_values), reverse=True):
        if not report.passed(n):
            break
        threshold = n
    report.threshold = threshold
    return report


def hilbert_series_numerator(M: GradedModule, j: int) -> int:
    """Coefficient of ``T^j`` in ``H_M(T) (1 - T)^m``."""
    m = M.nvars
    return sum((-1) ** k * comb(m, k) * hilbert_value(M, j - k) for k in range(m + 1))

