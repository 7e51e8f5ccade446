"""Graded invariants of monomial modules and the asymptotics of ``I^n M``."""

from .errors import AnnihilatedError, InputError, NotAReductionError, ZeroModuleError
from .linalg import DEFAULT_PRIME, PrimeField, rank, row_space_contains, rref
from .monomial import MonomialIdeal, colon, degree_slice, generated_upto, intersect, minimalize, power
from .module import (
    NEG_INF,
    BasisElement,
    Component,
    GradedModule,
    basis,
    cyclic,
    direct_sum,
    free,
    hilbert_value,
    ideal_module,
    ideal_power_module,
    krull_dim,
    largest_gen_degree,
    least_degree,
    min_generators,
    quotient_by_elements,
    shift_and_sum,
    truncate_at,
)
from .reduction import (
    ReductionIdeal,
    ReductionReport,
    generic_reduction_number,
    is_reduction_of_ideal,
    r_with_respect_to,
    reduction_matrix,
    rho,
)
from .koszul import BettiTable, betti_table, regularity, subcomplex_exactness

__version__ = "0.1.0"
