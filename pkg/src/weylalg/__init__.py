"""Exact computation in the first Weyl algebra over the rationals.

The algebra is generated by X and Y with Y*X - X*Y = 1.  This package
provides canonical normal-form arithmetic, the leading-form calculus along
the diagonal grading, factorization of homogeneous elements through the
product XY, exact centralizer computation up to a total-degree bound,
commutator derivations on centralizers, a differential-operator oracle for
independent verification, and a command-line interface.
"""

from .core import (
    ONE,
    WeylElement,
    X,
    Y,
    ZERO,
    add,
    commutator,
    from_terms,
    mul,
    power,
    scalar_mul,
    total_degree,
)
from .errors import (
    BoundError,
    BoundEscapeError,
    DegenerateMonoidError,
    ExprSyntaxError,
    ImpossiblePairError,
    InternalInconsistencyError,
    MalformedInputError,
    MembershipError,
    NotDixmierPairError,
    NotHomogeneousError,
    UndefinedOnZeroError,
    WeylError,
    WrongSectorError,
)
from .leading import (
    LeadingData,
    aligned,
    diag_degree,
    diag_degree_mirror,
    is_monic,
    is_x_dominant,
    is_y_dominant,
    leading_coeff,
    leading_coeff_mirror,
    leading_data,
    leading_form,
    leading_form_mirror,
    leading_term,
    leading_term_mirror,
    leading_weight,
    leading_weight_mirror,
    primitive_direction,
    primitive_direction_mirror,
    support,
)
from .graded import (
    GradedForm,
    XYPolynomial,
    Z,
    evaluate_at_element,
    from_graded_form,
    homogeneous_components,
    is_homogeneous,
    to_graded_form,
)
from .centralizer import (
    CentralizerBasis,
    CentralizerComponent,
    ComponentKind,
    MonoidInfo,
    centralizer_basis,
    decompose,
    expand_in_basis,
    homogeneous_centralizer_component,
    is_monomial_algebra_embedding,
    monoid_classes,
    monoid_up_to,
    ray_degree,
    recompose,
)
from .derivation import (
    DerivationReport,
    DixmierPair,
    ElementaryAutomorphism,
    PairCheckReport,
    ScriptLimits,
    ad,
    apply_script,
    check_dixmier_pair,
    derivation_report,
    dixmier_pair,
    dixmier_pair_from_script,
    is_dixmier_pair,
    no_partner_check,
    random_script,
)
from .oracle import act, max_y_exponent, oracle_equal, oracle_mul_check, poly_from_coeffs, x_power
from .cli import format_element, parse_element

__version__ = "0.1.0"
