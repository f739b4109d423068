"""Wedderburn profiles and continuous spectrum-shrinking maps between finite-dimensional algebras."""

from .algebra import (
    Algebra,
    AlgebraError,
    AssociativityError,
    Element,
    IdealBasis,
    NotAnIdealError,
    QuotientMap,
    UnitLawError,
    change_basis,
    direct_sum_algebra,
    is_invertible,
    make_algebra,
    matrix_unit_algebra,
    quotient_algebra,
    random_element,
    regular_rep,
    spectrum,
    truncated_polynomial_algebra,
)
from .diophantine import (
    Decision,
    SolutionSet,
    all_solutions,
    decide_all_shrink_preserving,
    decide_preserve,
    decide_shrink,
    eigenvalue_selection_exists,
    frobenius_number,
)
from .linalg import ExactMatrix, NumericFailure, char_poly, exact_kernel, float_eigenvalues
from .mapbuilder import ShrinkMapSpec, build_block_map, evaluate_map, prepare_source
from .scalars import GaussRational
from .sma import (
    Condensation,
    QuasiOrder,
    block_projection,
    condensation,
    sample_diag_conj,
    sma_algebra,
    sma_radical,
)
from .verify import (
    ExponentProfile,
    VerificationReport,
    check_preserving,
    check_quotient_lemma,
    check_shrinking,
    exponent_profile,
)
from .wedderburn import (
    WedderburnProfile,
    radical_basis,
    split_semisimple,
    split_simple_component,
    wedderburn_profile,
)

__version__ = "0.1.0"
