"""Exact Hall-Littlewood polynomials from Gelfand-Tsetlin pattern statistics.

Two independent evaluation routes for the same polynomials: a brute-force
oracle that antisymmetrizes over all n! permutations and divides exactly,
and pattern-statistic expansions built from tridiagonal transition
determinants and raising-operator closures.  The verification suites
check that both routes produce identical polynomials in x, q and t,
together with the classical specializations (Schur at t = 0, monomial
orbit sums at t = 1, Schur q-polynomials at t = -1, and Tokuyama's
formula).
"""

from .polyring import (
    Polynomial,
    constant,
    generators,
    monomial,
    parameter,
    permutation_sign,
    variable,
)
from .patterns import (
    EntryLabels,
    GtPattern,
    add_staircase,
    check_partition,
    diagonal_weight,
    entry_labels,
    enumerate_patterns,
    interleaves,
    is_strictly_decreasing,
    is_weakly_decreasing,
    next_rows,
    staircase,
    subdiagonal_weight,
    weakly_decreasing_tuples,
)
from .formulas import (
    RaisingOperator,
    elementary_raise,
    hl_pattern_expansion,
    hl_row_recursion,
    pattern_row_weights,
    raising_closure,
    row_weight_sum,
    stanley_filtered_sum,
    stanley_sum,
    tokuyama_row_recursion,
    tokuyama_sum,
    transition_det,
)
from .oracle import (
    hall_littlewood,
    max_oracle_vars,
    monomial_symmetric,
    schur,
    weyl_denominator,
)
from .verify import SUITE_NAMES, CaseResult, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "CaseResult",
    "EntryLabels",
    "GtPattern",
    "Polynomial",
    "RaisingOperator",
    "SUITE_NAMES",
    "VerifyReport",
    "add_staircase",
    "check_partition",
    "constant",
    "diagonal_weight",
    "elementary_raise",
    "entry_labels",
    "enumerate_patterns",
    "generators",
    "hall_littlewood",
    "hl_pattern_expansion",
    "hl_row_recursion",
    "interleaves",
    "is_strictly_decreasing",
    "is_weakly_decreasing",
    "max_oracle_vars",
    "monomial",
    "monomial_symmetric",
    "next_rows",
    "parameter",
    "pattern_row_weights",
    "permutation_sign",
    "raising_closure",
    "row_weight_sum",
    "run_suite",
    "schur",
    "staircase",
    "stanley_filtered_sum",
    "stanley_sum",
    "subdiagonal_weight",
    "tokuyama_row_recursion",
    "tokuyama_sum",
    "transition_det",
    "variable",
    "weakly_decreasing_tuples",
    "weyl_denominator",
]
