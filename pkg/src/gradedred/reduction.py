"""Reductions by linear forms and reductions of monomial ideals.

Genericity is simulated by sampling coefficient matrices uniformly from
GF(p).  Any specialization has rank at most the generic rank in every
degree, so each trial returns an upper bound for the reduction number and
the minimum over trials approaches the generic value from above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import monomial as mon
from .errors import InputError, NotAReductionError
from .linalg import rank
from .module import (
    GradedModule,
    basis,
    basis_index,
    hilbert_value,
    ideal_power_module,
    krull_dim,
    largest_gen_degree,
    min_generators,
    top_degree,
    _require_nonzero,
)
from .monomial import MonomialIdeal

DEFAULT_TRIALS = 5
DEFAULT_N_CAP = 200
DEFAULT_K_MAX = 20


@dataclass(frozen=True)
class ReductionIdeal:
    """An ideal generated by linear forms, stored as its coefficient matrix.

    Row ``i`` holds the coefficients of the ``i``-th form in ``x_1..x_m``.
    """

    coeffs: np.ndarray
    p: int

    def __post_init__(self):
        A = np.asarray(self.coeffs, dtype=np.int64)
        if A.ndim != 2:
            raise InputError("coefficient matrix must be 2-D")
        A = A % self.p
        A.setflags(write=False)
        object.__setattr__(self, "coeffs", A)

    @classmethod
    def from_forms(cls, forms, m: int, p: int) -> ReductionIdeal:
        forms = [list(f) for f in forms]
        if any(len(f) != m for f in forms):
            raise InputError(f"linear forms must have {m} coefficients")
        return cls(np.array(forms, dtype=np.int64).reshape(len(forms), m), p)

    @classmethod
    def random(cls, rng: np.random.Generator, d: int, m: int, p: int) -> ReductionIdeal:
        return cls(rng.integers(0, p, size=(d, m), dtype=np.int64), p)

    @property
    def size(self) -> int:
        return self.coeffs.shape[0]

    @property
    def nvars(self) -> int:
        return self.coeffs.shape[1]

    def __eq__(self, other):
        return (isinstance(other, ReductionIdeal) and self.p == other.p
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.p, self.coeffs.shape, self.coeffs.tobytes()))


@dataclass
class ReductionReport:
    value: int
    trials_used: int
    failed_trials: int
    seed: int | None

    def to_json(self) -> dict:
        return {"value": self.value, "trials_used": self.trials_used,
                "failed_trials": self.failed_trials, "seed": self.seed}


@lru_cache(maxsize=4096)
def multiplication_table(M: GradedModule, e: int) -> np.ndarray:
    """Column index in ``basis(M, e)`` of ``x_j * b`` for each ``b`` in ``basis(M, e-1)``.

    Entry ``-1`` marks products that vanish (they fall into a denominator).
    """
    src = basis(M, e - 1)
    idx = basis_index(M, e)
    T = np.full((len(src), M.nvars), -1, dtype=np.int64)
    for r, (i, mu) in enumerate(src):
        for j in range(M.nvars):
            nu = mu[:j] + (mu[j] + 1,) + mu[j + 1:]
            T[r, j] = idx.get((i, nu), -1)
    T.setflags(write=False)
    return T


def reduction_matrix(M: GradedModule, J: ReductionIdeal, e: int) -> np.ndarray:
    """Coordinates of ``y_i * b`` in ``basis(M, e)`` for ``b`` in ``basis(M, e-1)``.

    Rows are ordered form-major: row ``i * t_{e-1} + k`` is ``y_i`` times the
    ``k``-th basis element.
    """
    if J.nvars != M.nvars:
        raise InputError("linear forms and module live in different rings")
    T = multiplication_table(M, e)
    tb, te = T.shape[0], hilbert_value(M, e)
    A = np.zeros((J.size * tb, te), dtype=np.int64)
    if A.size == 0:
        return A
    rows = np.arange(tb)
    for j in range(M.nvars):
        live = T[:, j] >= 0
        cols = T[live, j]
        for i in range(J.size):
            A[i * tb + rows[live], cols] = J.coeffs[i, j]
    return A % J.p


def reduction_rank(M: GradedModule, J: ReductionIdeal, e: int) -> int:
    return rank(reduction_matrix(M, J, e), J.p)


def _saturates(M: GradedModule, J: ReductionIdeal, e: int) -> bool:
    """Whether ``(JM)_e = M_e``."""
    te = hilbert_value(M, e)
    if te == 0:
        return True
    if J.size * hilbert_value(M, e - 1) < te:
        return False
    return reduction_rank(M, J, e) == te


def r_with_respect_to(M: GradedModule, J: ReductionIdeal, n_cap: int = DEFAULT_N_CAP) -> int:
    """``r_J(M)``: the least ``n >= D(M)`` with ``(JM)_{n+1} = M_{n+1}``."""
    _require_nonzero(M)
    D = largest_gen_degree(M)
    for n in range(D, D + n_cap + 1):
        if _saturates(M, J, n + 1):
            return n
    raise NotAReductionError(f"J is not an M-reduction within cap (scanned to degree {D + n_cap + 1})")


def _scan_below(M: GradedModule, J: ReductionIdeal, start: int, stop: int) -> int | None:
    for n in range(start, stop):
        if _saturates(M, J, n + 1):
            return n
    return None


def generic_reduction_number(
    M: GradedModule,
    trials: int = DEFAULT_TRIALS,
    seed: int | None = 0,
    n_cap: int = DEFAULT_N_CAP,
    rng: np.random.Generator | None = None,
) -> ReductionReport:
    """``r(M)`` as the best reduction number over random minimal reductions.

    Trials after the first only scan degrees below the current best, since
    a trial can only improve the minimum there.
    """
    _require_nonzero(M)
    if trials < 1:
        raise InputError("need at least one trial")
    d = krull_dim(M)
    if d == 0:
        return ReductionReport(top_degree(M), 0, 0, seed)
    if rng is None:
        rng = np.random.default_rng(seed)
    D = largest_gen_degree(M)
    best: int | None = None
    failed = used = 0
    for _ in range(trials):
        used += 1
        J = ReductionIdeal.random(rng, int(d), M.nvars, M.p)
        if best is None:
            best = _scan_below(M, J, D, D + n_cap + 1)
            if best is None:
                failed += 1
        else:
            found = _scan_below(M, J, D, best)
            if found is not None:
                best = found
        if best == D:
            # the lower bound r >= D(M) is attained; more trials cannot help
            break
    if best is None:
        raise NotAReductionError(
            f"all {trials} trials failed to reduce M within cap {n_cap}; "
            "check the dimension or use a larger prime")
    return ReductionReport(best, used, failed, seed)


def reduction_number(M: GradedModule, trials: int = DEFAULT_TRIALS, seed: int | None = 0,
                     n_cap: int = DEFAULT_N_CAP) -> int:
    return generic_reduction_number(M, trials, seed, n_cap).value


def is_reduction_of_ideal(Jm: MonomialIdeal, I: MonomialIdeal, M: GradedModule,
                          k_max: int = DEFAULT_K_MAX) -> bool:
    return reduction_witness(Jm, I, M, k_max) is not None


def reduction_witness(Jm: MonomialIdeal, I: MonomialIdeal, M: GradedModule,
                      k_max: int = DEFAULT_K_MAX) -> int | None:
    """Least ``k`` in ``1..k_max`` with ``Jm I^k M = I^{k+1} M``, else ``None``.

    ``Jm I^k M`` is always inside ``I^{k+1} M``, so it suffices that every
    minimal generator of ``I^{k+1} M`` lies in ``Jm I^k g_i``.
    """
    if not I.contains_ideal(Jm):
        raise InputError(f"{Jm} is not contained in {I}")
    for k in range(1, k_max + 1):
        target = ideal_power_module(I, k + 1, M)
        JIk = Jm * mon.power(I, k)
        products = [JIk * c.numerator for c in M.components]
        if all(mu in products[i] for i, mu in min_generators(target)):
            return k
    return None


@dataclass
class RhoResult:
    value: int
    witness_k: int | None
    rejected_degrees: list[int] = field(default_factory=list)
    k_max: int = DEFAULT_K_MAX

    def to_json(self) -> dict:
        return {"value": self.value, "witness_k": self.witness_k,
                "rejected_degrees": self.rejected_degrees, "k_max": self.k_max}


def rho_search(I: MonomialIdeal, M: GradedModule, k_max: int = DEFAULT_K_MAX) -> RhoResult:
    """Least top degree of a reduction of ``I`` relative to ``M``.

    Any reduction generated in degrees ``<= d`` sits inside the subideal
    spanned by generators of ``I`` of degree ``<= d``, so only those
    subideals need testing.  Rejections are "no witness up to k_max".
    """
    if I.is_zero():
        raise InputError("rho needs a nonzero ideal")
    _require_nonzero(M)
    rejected = []
    degrees = sorted(set(I.degrees()))
    for d in degrees:
        Jd = mon.generated_upto(I, d)
        k = reduction_witness(Jd, I, M, k_max)
        if k is not None:
            return RhoResult(max(Jd.degrees()), k, rejected, k_max)
        rejected.append(d)
    # generated_upto(I, D(I)) = I always reduces itself
    return RhoResult(degrees[-1], None, rejected, k_max)


def rho(I: MonomialIdeal, M: GradedModule, k_max: int = DEFAULT_K_MAX) -> int:
    return rho_search(I, M, k_max).value
