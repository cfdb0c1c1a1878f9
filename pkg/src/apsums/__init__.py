"""Exact power sums of arithmetic progressions, their root structure, and
bounded searches for their polynomial values."""

from .classical import bernoulli_number, bernoulli_poly, euler_poly
from .errors import ApsumsError, DomainError, HypothesisError, ParameterError
from .poly import (
    Poly,
    SquarefreeDecomposition,
    parse_poly,
    poly_compose_linear,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_height,
    rational_roots,
    squarefree_decompose,
)
from .power_sums import (
    PowerSumFamily,
    ProgressionParams,
    build_S,
    build_T,
    direct_alt_power_sum,
    direct_power_sum,
)
from .reduction import (
    FinitenessCertificate,
    PowerRHS,
    QuadraticRHS,
    Verdict,
    contradiction_probe_S,
    contradiction_probe_T,
    reduce_power,
    reduce_quadratic,
)
from .roots import (
    analyze_roots,
    check_lemma3,
    check_lemma4,
    check_lemma5_rational,
    check_lemma6,
)
from .search import SearchBox, Solution, integer_nth_root, solve_power_rhs, solve_quadratic_rhs

__version__ = "0.1.0"
