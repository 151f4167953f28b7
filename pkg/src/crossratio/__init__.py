"""Exact cross-ratio calculus for collinear points over skew fields.

The package bundles three exact skew-field implementations (rationals,
prime fields, rational quaternions), the ratio and cross-ratio calculus on
a coordinatized line including the point at infinity, ruler constructions
realizing field arithmetic inside the affine plane, a Desargues
configuration checker and generator, and a seeded exact verification
engine with machine-readable reports.
"""

from .fields import (
    DivisionByZeroError,
    Element,
    Field,
    FieldMismatchError,
    GaloisField,
    QuaternionField,
    RationalField,
    commutes,
    conjugate_by,
    field_by_name,
    format_element,
    is_central,
    parse_element,
)
from .plane import (
    AuxiliaryPointError,
    Construction,
    DegenerateConfigurationError,
    DesarguesConfig,
    GenerationFailureError,
    HypothesisViolationError,
    IdenticalLinesError,
    IdenticalPointsError,
    NotOnLineError,
    PlaneLine,
    PlanePoint,
    check_desargues,
    collinear,
    construct_product,
    construct_sum,
    coordinatize,
    default_aux,
    generate_desargues_config,
    geometric_add,
    geometric_mul,
    intersect,
    line_through,
    parallel,
    parallel_through,
    point,
    point_at,
    random_point,
    validate_desargues_config,
)
from .ratio import (
    CrossRatioArgumentError,
    ExtendedPoint,
    InfiniteSolutionError,
    InvalidRatioPointError,
    cross_ratio,
    cross_ratio_alt,
    invert_all,
    negate_all,
    ratio2,
    ratio2_swapped,
    ratio3,
    ratio3_swapped,
    solve_fourth_point,
)
from .verify import (
    CHECKS,
    CheckSpec,
    UnknownCheckError,
    resolve_conjugation_form,
    run_check,
    run_suite,
)

__version__ = "0.1.0"
