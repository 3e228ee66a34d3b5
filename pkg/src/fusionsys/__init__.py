"""Exact computation with saturated fusion systems over finite p-groups."""

from .errors import (
    ClosureTooLarge,
    FusionError,
    GenerationMismatch,
    GroupTooLarge,
    GuardrailExceeded,
    HypothesisFailed,
    InternalInconsistency,
    NotAbelian,
    NotBijection,
    NotCommuting,
    NotFusionPreserving,
    NotNormal,
    NotPGroup,
    NotSaturated,
    NotSubgroup,
    NotSubsystem,
    NotSummable,
    NotSylow,
    SuiteUnknown,
    UsageError,
)
from .groups import (
    CharacteristicSubgroups,
    DirectProduct,
    FiniteGroup,
    GroupHom,
    OmegaSeries,
    Subgroup,
    all_homs,
    automorphisms,
    characteristic_subgroups,
    cycles_to_perm,
    direct_product,
    fitting_split,
    injective_homs,
    normal_closure,
    omega_central_series,
    perm_to_cycles,
    quotient,
    subgroups,
    sylow,
)
from .fusion import (
    ConjugacyData,
    FusionInvariants,
    FusionSystem,
    SaturationReport,
    SubgroupClassification,
    alperin_generators,
    center_of,
    classify_subgroup,
    conjugacy,
    focal_of,
    fusion_equal,
    fusion_invariants,
    fusion_of_group,
    generated_fusion,
    inner_fusion,
    is_saturated,
    restrict_full,
    saturation_report,
)
from .morphisms import (
    CommuteResult,
    FusionMorphism,
    ProductSystem,
    Subsystem,
    check_morphism,
    commute_check,
    identity_morphism,
    image,
    is_product_decomposition,
    kernel,
    product,
    subsystem_of,
    sum_morphisms,
    zero_morphism,
)
from .factor import (
    AutStructure,
    Factorization,
    FittingSplit,
    KrsCertificate,
    NormalEndomorphism,
    OmegaContext,
    aut_structure,
    factorize,
    factorize_all,
    find_isomorphism,
    fitting_factorize,
    fusion_automorphisms,
    fusion_endomorphisms,
    goldschmidt_factor,
    is_indecomposable,
    krs_certificate,
    normal_automorphisms,
    normal_complement,
    normal_end_properties,
    normal_endos,
    sum_if_composite_central,
    trivial_omega,
)

__version__ = "0.1.0"
