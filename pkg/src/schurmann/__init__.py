"""Exact cocycles, generating functionals and second Hochschild cohomology
on the finitely presented *-algebras of universal quantum groups.

All arithmetic is over the Gaussian rationals, so every check in the package
is exact: equalities hold on the nose, never up to a tolerance.
"""

from .algebra import (
    Element,
    Letter,
    Presentation,
    antipode_element,
    build_presentation,
    counit,
    format_word,
    letters,
    words_up_to,
)
from .cocycle import (
    BMatrices,
    Cocycle,
    CocycleSpace,
    b_matrices,
    cocycle_general,
    cocycle_orth_from_V,
    cocycle_unitary_from_V,
    direct_sum_cocycle,
    evaluate_cocycle,
    gaussian_cocycle,
    gram_vvstar,
    is_real_cocycle,
    pullback_cocycle,
    reality_pair,
    scalar_gaussian_cocycle,
    solve_cocycles,
)
from .cohomology import (
    ClassCoordinates,
    CoboundaryCocycle,
    CombinationCocycle,
    CounitFunctional,
    KPairCocycle,
    Primitive,
    TwoCocycle,
    basis_orthogonal,
    basis_unitary,
    check_2cocycle,
    check_primitive,
    class_coordinates,
    coboundary1,
    defect_orthogonal,
    defect_unitary,
    is_normalized,
    normalize,
    primitive,
    square_zero_on_letters,
    sum_identity_defects,
    verify_primitive_exhaustive,
)
from .errors import InputError, ObstructionError, RelationViolation
from .functional import (
    Functional,
    LKReport,
    admits_generating_functional,
    admits_gf_orth,
    admits_gf_unitary,
    evaluate_functional,
    gram_psd_check,
    hermitianize,
    lk_decomposition,
    schurmann_functional,
    su_q3_obstruction,
)
from .linalg import QMatrix, QVector, gram_matrix, kernel_basis, psd_check, rank, solve
from .representation import (
    GeneratorSubstitution,
    Representation,
    counit_rep,
    direct_sum_rep,
    evaluate_rep,
    gaussian_subspace,
    pullback_rep,
    representation,
    sign_rep,
)
from .scalars import I, ONE, ZERO, Qi, rational
from .scenarios import RunConfig, ScenarioResult, format_results, run_all

__version__ = "0.1.0"

__all__ = [
    "BMatrices",
    "ClassCoordinates",
    "CoboundaryCocycle",
    "Cocycle",
    "CocycleSpace",
    "CombinationCocycle",
    "CounitFunctional",
    "Element",
    "Functional",
    "GeneratorSubstitution",
    "I",
    "InputError",
    "KPairCocycle",
    "LKReport",
    "Letter",
    "ONE",
    "ObstructionError",
    "Presentation",
    "Primitive",
    "QMatrix",
    "QVector",
    "Qi",
    "RelationViolation",
    "Representation",
    "RunConfig",
    "ScenarioResult",
    "TwoCocycle",
    "ZERO",
    "admits_generating_functional",
    "admits_gf_orth",
    "admits_gf_unitary",
    "antipode_element",
    "b_matrices",
    "basis_orthogonal",
    "basis_unitary",
    "build_presentation",
    "check_2cocycle",
    "check_primitive",
    "class_coordinates",
    "coboundary1",
    "cocycle_general",
    "cocycle_orth_from_V",
    "cocycle_unitary_from_V",
    "counit",
    "counit_rep",
    "defect_orthogonal",
    "defect_unitary",
    "direct_sum_cocycle",
    "direct_sum_rep",
    "evaluate_cocycle",
    "evaluate_functional",
    "evaluate_rep",
    "format_results",
    "format_word",
    "gaussian_cocycle",
    "gaussian_subspace",
    "gram_matrix",
    "gram_psd_check",
    "gram_vvstar",
    "hermitianize",
    "is_normalized",
    "is_real_cocycle",
    "kernel_basis",
    "letters",
    "lk_decomposition",
    "normalize",
    "primitive",
    "psd_check",
    "pullback_cocycle",
    "pullback_rep",
    "rank",
    "rational",
    "reality_pair",
    "representation",
    "run_all",
    "scalar_gaussian_cocycle",
    "schurmann_functional",
    "sign_rep",
    "solve",
    "solve_cocycles",
    "square_zero_on_letters",
    "sum_identity_defects",
    "su_q3_obstruction",
    "verify_primitive_exhaustive",
    "words_up_to",
]
