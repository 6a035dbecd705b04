"""Representation varieties of graded maximal Cohen-Macaulay modules.

Exact commutative algebra (rationals and prime fields, weighted-graded
polynomials, Buchberger Groebner bases), graded presentations with Hilbert
series, defining ideals of matrix-representation varieties, and orbit /
isomorphism machinery including finite-field censuses.
"""

__version__ = "0.1.0"

from .families import (
    NamedModulePoint,
    example_algebra_x2,
    generator_degree_spread,
    module_point_In,
    module_point_R,
    normalize_shifts,
    rank_over_S,
    three_orbit_representatives,
)
from .fields import GF, QQ, PrimeField, RationalField
from .graded import (
    GradedAlgebra,
    HilbertSeries,
    ShiftType,
    hilbert_polynomial,
    hilbert_series,
    hilbert_series_of_type,
    hom_entry_degrees,
    validate_presentation,
    verify_normalization,
)
from .groebner import (
    IdealHandle,
    buchberger,
    component_monomials,
    ideal,
    ideal_equal,
    ideal_membership,
    is_zero_dimensional,
    normal_form,
)
from .orbits import (
    BudgetExceededError,
    GroupElement,
    HomComponentBasis,
    InvariantViolationError,
    OrbitCensus,
    are_isomorphic,
    conjugate,
    enumerate_group,
    enumerate_points,
    group_order,
    hom_component,
    is_indecomposable,
    orbit_partition,
)
from .parsing import format_algebra, parse_algebra_file, parse_algebra_text, parse_polynomial
from .poly import Polynomial, PolynomialRing, RingMismatchError
from .repvariety import (
    MatrixPoint,
    ParameterSpace,
    RepIdeal,
    build_defining_ideal,
    evaluate,
    parameterize,
    point_from_matrices,
    validate_point,
)
