"""Series of invariants of ``I^n M`` and checks of their eventual linearity.

The slope fed to :func:`detect_linearity` is always ``rho_I(M)`` computed
independently by :func:`gradedred.reduction.rho`; it is never fitted from
the series itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import module as gm
from .config import RunConfig
from .errors import AnnihilatedError, InputError
from .koszul import regularity
from .module import GradedModule, ideal_power_module
from .monomial import MonomialIdeal
from .reduction import generic_reduction_number, rho

QUANTITIES = ("r", "D", "d", "dim", "reg")


class GrfKind(enum.Enum):
    GEN_DEGREE = "D"
    REGULARITY = "reg"

    def __call__(self, M: GradedModule) -> int:
        if self is GrfKind.GEN_DEGREE:
            return gm.largest_gen_degree(M)
        return regularity(M)


def quantity_value(M: GradedModule, quantity: str, config: RunConfig, n: int = 0) -> int | float:
    if quantity == "r":
        return generic_reduction_number(M, config.trials, config.seed, config.n_cap,
                                        rng=config.rng_for(n)).value
    if quantity == "D":
        return gm.largest_gen_degree(M)
    if quantity == "d":
        return gm.least_degree(M)
    if quantity == "dim":
        return gm.krull_dim(M)
    if quantity == "reg":
        return regularity(M)
    raise InputError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")


def compute_series(I: MonomialIdeal, M: GradedModule, quantity: str, n_max: int,
                   config: RunConfig | None = None) -> list:
    """``[quantity(I^n M) for n = 1..n_max]``."""
    config = config or RunConfig()
    if quantity not in QUANTITIES:
        raise InputError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    if I.is_zero() or M.is_zero():
        raise InputError("series need a nonzero ideal and module")
    values = []
    for n in range(1, n_max + 1):
        N = ideal_power_module(I, n, M)
        if N.is_zero():
            raise AnnihilatedError(n)
        values.append(quantity_value(N, quantity, config, n))
    return values


@dataclass
class SeriesReport:
    quantity: str
    values: list
    rho: int
    intercepts: list
    n0: int | None
    epsilon: int | None
    status: str
    monotone: bool | None = None

    @property
    def stabilized(self) -> bool:
        return self.status == "stabilized"

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items()}


def detect_linearity(values: list, rho: int, window: int = 3, quantity: str = "") -> SeriesReport:
    """Test whether ``values[n-1] - rho * n`` is constant on the last ``window`` terms."""
    if window < 2:
        raise InputError("window must be at least 2")
    intercepts = [v - rho * n for n, v in enumerate(values, start=1)]
    tail = intercepts[-window:]
    if len(tail) < window or any(x != tail[-1] for x in tail):
        return SeriesReport(quantity, list(values), rho, intercepts, None, None, "inconclusive")
    eps = tail[-1]
    n0 = len(intercepts)
    while n0 > 1 and intercepts[n0 - 2] == eps:
        n0 -= 1
    return SeriesReport(quantity, list(values), rho, intercepts, n0, eps, "stabilized")


def reference_slope(quantity: str, values: list, rho_value: int) -> int:
    """Slope a series is compared against.

    ``r``, ``D`` and ``reg`` use ``rho``; ``dim`` is eventually constant; ``d``
    carries no theorem, so its last observed difference is used.
    """
    if quantity in ("r", "D", "reg"):
        return rho_value
    if quantity == "dim":
        return 0
    return values[-1] - values[-2] if len(values) > 1 else 0


def series_report(I: MonomialIdeal, M: GradedModule, quantity: str,
                  config: RunConfig | None = None, rho_value: int | None = None) -> SeriesReport:
    config = config or RunConfig()
    if rho_value is None:
        rho_value = rho(I, M, config.k_max)
    values = compute_series(I, M, quantity, config.n_max, config)
    slope = reference_slope(quantity, values, rho_value)
    return detect_linearity(values, slope, config.window, quantity)


@dataclass
class TheoremReport:
    """Outcome of checking one asymptotic statement on one instance."""

    rho: int
    d_M: int
    series: dict[str, SeriesReport] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    counterexample: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "rho": self.rho, "d_M": self.d_M, "passed": self.passed, "checks": self.checks,
            "series": {k: s.to_json() for k, s in self.series.items()},
            "counterexample": self.counterexample,
        }


def verify_main_theorem(I: MonomialIdeal, M: GradedModule, n_max: int | None = None,
                        config: RunConfig | None = None) -> TheoremReport:
    """Check eventual linearity of ``r(I^n M)`` and ``D(I^n M)`` with slope ``rho``,
    the chain ``eps1 >= eps2 >= d(M)``, and ``D(I^n M) >= rho n + d(M)`` for all n."""
    config = config or RunConfig()
    n_max = n_max or config.n_max
    slope = rho(I, M, config.k_max)
    dM = gm.least_degree(M)
    rep = TheoremReport(slope, dM)
    r_vals = compute_series(I, M, "r", n_max, config)
    D_vals = compute_series(I, M, "D", n_max, config)
    r_rep = detect_linearity(r_vals, slope, config.window, "r")
    D_rep = detect_linearity(D_vals, slope, config.window, "D")
    rep.series = {"r": r_rep, "D": D_rep}
    rep.checks["r_stabilized"] = r_rep.stabilized
    rep.checks["D_stabilized"] = D_rep.stabilized
    if r_rep.stabilized and D_rep.stabilized:
        rep.checks["eps1_ge_eps2"] = r_rep.epsilon >= D_rep.epsilon
        rep.checks["eps2_ge_dM"] = D_rep.epsilon >= dM
    bad = [n for n, D in enumerate(D_vals, start=1) if D < slope * n + dM]
    rep.checks["D_lower_bound"] = not bad
    under = [n for n, (r, D) in enumerate(zip(r_vals, D_vals), start=1) if r < D]
    rep.checks["r_ge_D"] = not under
    if not rep.passed:
        rep.counterexample = {"I": str(I), "M": str(M), "r": r_vals, "D": D_vals,
                              "D_bound_violations": bad, "r_below_D": under}
    return rep


def verify_grf_linearity(kind: GrfKind, I: MonomialIdeal, M: GradedModule,
                         n_max: int | None = None, config: RunConfig | None = None) -> TheoremReport:
    """``Gamma(I^n M) = rho n + e`` eventually, with ``e >= d(M)``."""
    config = config or RunConfig()
    n_max = n_max or config.n_max
    slope = rho(I, M, config.k_max)
    dM = gm.least_degree(M)
    rep = TheoremReport(slope, dM)
    vals = compute_series(I, M, kind.value, n_max, config)
    s = detect_linearity(vals, slope, config.window, kind.value)
    rep.series[kind.value] = s
    rep.checks["stabilized"] = s.stabilized
    if s.stabilized:
        rep.checks["e_ge_dM"] = s.epsilon >= dM
    if not rep.passed:
        rep.counterexample = {"I": str(I), "M": str(M), "values": vals}
    return rep


def quotient_reduction_series(I: MonomialIdeal, M: GradedModule, n_max: int | None = None,
                              config: RunConfig | None = None) -> SeriesReport:
    """``r(M / I^n M)`` for ``n = 1..n_max``: monotonicity plus an exploratory
    slope read off the last difference."""
    config = config or RunConfig()
    n_max = n_max or config.n_max
    values = []
    for n in range(1, n_max + 1):
        Q = gm.quotient_by_ideal_power(I, n, M)
        if Q.is_zero():
            raise InputError(f"M / I^{n} M is the zero module")
        values.append(generic_reduction_number(Q, config.trials, config.seed, config.n_cap,
                                               rng=config.rng_for(n)).value)
    slope = values[-1] - values[-2] if len(values) > 1 else 0
    rep = detect_linearity(values, slope, min(config.window, max(len(values), 2)), "r_quotient")
    if len(values) < 2:
        rep.status = "inconclusive"
    rep.monotone = all(a <= b for a, b in zip(values, values[1:]))
    return rep


# -- generalized regularity function axioms ---------------------------------


@dataclass
class AxiomReport:
    kind: GrfKind
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, axiom: str, ok: bool, **witness) -> None:
        self.counts[axiom] = self.counts.get(axiom, 0) + 1
        if not ok:
            self.failures.append({"axiom": axiom, **{k: str(v) for k, v in witness.items()}})


def _permuted(M: GradedModule, rng: np.random.Generator) -> GradedModule:
    order = rng.permutation(len(M.components))
    return GradedModule(M.nvars, tuple(M.components[i] for i in order), M.p)


def _random_generators(M: GradedModule, rng: np.random.Generator, count: int) -> list:
    lo = gm.least_degree(M)
    e = int(rng.integers(lo, gm.largest_gen_degree(M) + 3))
    pool = list(gm.basis(M, e)) or list(gm.basis(M, lo))
    picks = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
    return [pool[int(k)] for k in picks]


def check_grf_axioms(kind: GrfKind, seed: int = 0, trials: int = 100,
                     make_module: Callable | None = None) -> AxiomReport:
    """Test axioms (1)-(5) of a generalized regularity function on random modules."""
    from .generators import random_module

    make_module = make_module or random_module
    rng = np.random.default_rng(seed)
    rep = AxiomReport(kind)
    done = 0
    while done < trials:
        M = make_module(rng)
        N = make_module(rng, nvars=M.nvars)
        g = kind(M)
        rep.record("1_isomorphism", kind(_permuted(M, rng)) == g, M=M)
        p = int(rng.integers(-2, 4))
        rep.record("2_shift", kind(M.shift(p)) == g + p, M=M, p=p)
        rep.record("3_ge_D", g >= gm.largest_gen_degree(M), M=M)
        rep.record("4_direct_sum", kind(gm.direct_sum(M, N)) == max(g, kind(N)), M=M, N=N)
        elems = _random_generators(M, rng, int(rng.integers(1, 3)))
        sub = gm.submodule_by_elements(M, elems)
        quo = gm.quotient_by_elements(M, elems)
        if quo.is_zero():
            continue
        rep.record("5_short_exact", kind(quo) <= max(g, kind(sub) - 1), M=M, sub=sub)
        done += 1
    return rep
