"""Brute-force recomputation of D, dim and r for cross-checking.

Nothing here goes through the generator bookkeeping, the numpy elimination
kernel or the scan of :func:`gradedred.reduction.r_with_respect_to`; every
quantity is read off graded pieces by direct enumeration.
"""

from __future__ import annotations

import random
from itertools import product

from . import monomial as mon
from .errors import ZeroModuleError
from .module import GradedModule, NEG_INF


def piece(M: GradedModule, e: int) -> list[tuple[int, tuple[int, ...]]]:
    """Basis of ``M_e`` by enumerating all exponent vectors of the right degree."""
    out = []
    for i, c in enumerate(M.components):
        target = e - c.shift
        if target < 0:
            continue
        for mu in product(range(target + 1), repeat=M.nvars):
            if sum(mu) == target and mu in c.numerator and mu not in c.denominator:
                out.append((i, mu))
    return out


def scan_bounds(M: GradedModule) -> tuple[int, int]:
    """A degree range outside of which nothing interesting happens."""
    live = [c for c in M.components if not c.is_zero()]
    lo = min(c.shift for c in live)
    hi = max(c.shift + mon.degree(mon.lcm(c.numerator.lcm(), c.denominator.lcm())) for c in live)
    return lo, hi + M.nvars + 2


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((k for k in range(rk, len(rows)) if rows[k][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = pow(rows[rk][c], p - 2, p)
        rows[rk] = [x * inv % p for x in rows[rk]]
        for k in range(len(rows)):
            if k != rk and rows[k][c]:
                f = rows[k][c]
                rows[k] = [(a - f * b) % p for a, b in zip(rows[k], rows[rk])]
        rk += 1
    return rk


def top_generator_degree(M: GradedModule) -> int:
    """``D(M)``: largest ``e`` where some basis monomial of ``M_e`` is not ``x_j`` times
    an element of ``M_{e-1}``."""
    if M.is_zero():
        raise ZeroModuleError("undefined on zero module")
    lo, hi = scan_bounds(M)
    best = None
    for e in range(lo, hi + 1):
        for i, mu in piece(M, e):
            g = M.components[i].numerator
            below = [mu[:j] + (mu[j] - 1,) + mu[j + 1:] for j in range(M.nvars) if mu[j]]
            if not any(nu in g for nu in below):
                best = e
    return best


def hilbert_dimension(M: GradedModule) -> int | float:
    """Krull dimension from the degree of the Hilbert polynomial.

    Past the Taylor bound the Hilbert function is polynomial; ``dim`` is the
    least ``k`` whose ``k``-th finite difference vanishes there.
    """
    if M.is_zero():
        return NEG_INF
    _, hi = scan_bounds(M)
    m = M.nvars
    vals = [len(piece(M, e)) for e in range(hi, hi + m + 2)]
    for k in range(m + 2):
        if not any(vals):
            return k
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return m


def reduction_number_by_definition(M: GradedModule, J: list[list[int]], p: int) -> int:
    """``max{n : (JM)_n != M_n}`` over the scan range, with ``J`` given by coefficient rows."""
    lo, hi = scan_bounds(M)
    worst = None
    for n in range(lo, hi + 1):
        target = piece(M, n)
        if not target:
            continue
        col = {b: k for k, b in enumerate(target)}
        rows = []
        for form in J:
            for i, mu in piece(M, n - 1):
                row = [0] * len(target)
                for j, a in enumerate(form):
                    nu = mu[:j] + (mu[j] + 1,) + mu[j + 1:]
                    if (i, nu) in col:
                        row[col[i, nu]] = (row[col[i, nu]] + a) % p
                rows.append(row)
        if rank_mod_p(rows, p) < len(target):
            worst = n
    if worst == hi:
        raise ArithmeticError("J does not reduce M inside the scan range")
    return worst


def generic_reduction_number(M: GradedModule, trials: int = 3, seed: int = 0) -> int:
    if M.is_zero():
        raise ZeroModuleError("undefined on zero module")
    d = hilbert_dimension(M)
    rnd = random.Random(seed)
    best = None
    for _ in range(trials):
        J = [[rnd.randrange(M.p) for _ in range(M.nvars)] for _ in range(int(d))]
        try:
            value = reduction_number_by_definition(M, J, M.p)
        except ArithmeticError:
            continue
        best = value if best is None else min(best, value)
        if d == 0:
            break
    return best
