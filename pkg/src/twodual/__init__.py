"""Finite dualities against two-element templates.

The package computes hom-sets into two-element templates, builds duals
and second duals, evaluates reflexivity, and works with the ⋈ linkage
relation on subsets: axiom checking, halfspace enumeration, and the
constructive separation procedure.  Bi-convexities tie the linkage view
to convexity-style dualities.  ``twodual.instances`` carries the
template catalog, seeded generators, and the verification suites that
back the command-line ``verify`` command.
"""

from .bea import (
    AxiomReport,
    BeaOracle,
    all_halfspaces,
    associated_order,
    bea_query,
    check_axiom,
    check_axioms,
    complement,
    family_bea,
    is_halfspace,
    oracle_to_table,
    require_axioms,
    separate,
)
from .caps import DEFAULT_CAPS, get_cap, reload_caps
from .convexity import (
    BiConvexity,
    ComplementedReport,
    NormalReport,
    PaschConvexReport,
    bea_from_biconvexity,
    biconvexity_from_bea,
    check_complemented,
    check_normal,
    check_pasch_convex,
    conv_hull,
    verify_convexity_duality,
)
from .core import (
    FiniteStructure,
    SetFamily,
    Signature,
    Symbol,
    TwoTemplate,
    bits,
    transpose,
)
from .duality import (
    DualStructure,
    EquivalenceReport,
    EvalReport,
    PairReport,
    SurjectionReport,
    UltimateDual,
    bidual_and_evaluate,
    check_semi_dual,
    dual,
    dual_of_surjection,
    evaluation_rows,
    hom_equivalence,
    oracle_from_homs,
    ultimate_bidual_report,
    ultimate_dual,
)
from .errors import (
    AxiomsFail,
    DualityError,
    DuplicateComplement,
    EmptyUniverse,
    HomLimitExceeded,
    InputError,
    MissingConstants,
    NotHomomorphism,
    NotNormal,
    NotSeparated,
    NotSurjective,
    PaschFailure,
    PreconditionViolated,
    RoundTripFailure,
    S1Violation,
    SignatureMismatch,
    TimeoutExceeded,
    UniverseTooLarge,
)
from .homs import HomSet, SeparationReport, enumerate_homs, is_separated
from .rng import GENERATOR_ID, SplitMix64

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomsFail",
    "BeaOracle",
    "BiConvexity",
    "ComplementedReport",
    "DEFAULT_CAPS",
    "DualStructure",
    "DualityError",
    "DuplicateComplement",
    "EmptyUniverse",
    "EquivalenceReport",
    "EvalReport",
    "FiniteStructure",
    "GENERATOR_ID",
    "HomLimitExceeded",
    "HomSet",
    "InputError",
    "MissingConstants",
    "NormalReport",
    "NotHomomorphism",
    "NotNormal",
    "NotSeparated",
    "NotSurjective",
    "PairReport",
    "PaschConvexReport",
    "PaschFailure",
    "PreconditionViolated",
    "RoundTripFailure",
    "S1Violation",
    "SeparationReport",
    "SetFamily",
    "Signature",
    "SignatureMismatch",
    "SplitMix64",
    "SurjectionReport",
    "Symbol",
    "TwoTemplate",
    "TimeoutExceeded",
    "UltimateDual",
    "UniverseTooLarge",
    "all_halfspaces",
    "associated_order",
    "bea_from_biconvexity",
    "bea_query",
    "biconvexity_from_bea",
    "bidual_and_evaluate",
    "bits",
    "check_axiom",
    "check_axioms",
    "check_complemented",
    "check_normal",
    "check_pasch_convex",
    "check_semi_dual",
    "complement",
    "conv_hull",
    "dual",
    "dual_of_surjection",
    "enumerate_homs",
    "evaluation_rows",
    "family_bea",
    "get_cap",
    "hom_equivalence",
    "is_halfspace",
    "is_separated",
    "oracle_from_homs",
    "oracle_to_table",
    "reload_caps",
    "require_axioms",
    "separate",
    "transpose",
    "ultimate_bidual_report",
    "ultimate_dual",
    "verify_convexity_duality",
    "__version__",
]
