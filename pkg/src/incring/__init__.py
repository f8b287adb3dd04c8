"""Exact incidence rings of locally finite prosets, their unit groups,
poset recovery from ring access, and the calculus of admissible maps."""

__version__ = "0.1.0"

from .errors import (
    IncRingError,
    HypothesisViolation,
    IncompatibleOperands,
    InfiniteNeighborhood,
    LocalFinitenessBudgetExceeded,
    NotComparable,
    NotComposable,
    NotConnected,
    NotConvex,
    NotConvexImage,
    NotFcc,
    NotIdempotent,
    NotInDiagonalSupport,
    NotInvertible,
    NotIrreducible,
    NotOrderPreserving,
    NotParallel,
    NoValidCutPair,
    OverlappingAugmentation,
    PosetRequired,
    RingBooleanPartTooLarge,
    SearchBudgetExceeded,
)
from .rings import QQ, ZZ, CoeffRing, IntegerRing, ModRing, PrimeField, RationalRing
from .prosets import (
    AugmentedFamily,
    CustomFamily,
    NFamily,
    NStarDivFamily,
    Proset,
    ProsetFamily,
    ZFamily,
    ZigFamily,
    interval_closure,
    two_block,
)
from .matrices import (
    CoeffIdeal,
    ConvexIdeal,
    IncMatrix,
    IntervalIdeal,
    LocallyConvexIdeal,
    SumIdeal,
    ideal_membership,
    identity,
    indicator,
    join_components,
    scalar_diag,
    unit,
    zero,
)
from .glgroup import (
    GroupElement,
    certify,
    commutator,
    dickson_normal_closure,
    enumerate_invertibles,
    invert,
    is_central,
    is_invertible,
    is_scalar_unit,
    iterated_commutator_sample,
    mulclose,
    normal_subgroup_membership,
    quotient_project,
    random_invertible,
    transpose_op_iso,
)
from .lazy import (
    AglElement,
    LazyMatrix,
    agl_embed,
    agl_identity,
    agl_invert,
    agl_mul,
    lazy_finitary,
    lazy_from_oracle,
    lazy_identity,
    lazy_invert,
    lazy_mul,
    named_oracle,
    qz_window_check,
)
from .recovery import (
    BundleAccess,
    MatrixAccess,
    b_of,
    class_equiv,
    class_leq,
    erase,
    is_topologically_nilpotent,
    recover_poset,
    scramble,
)
from .functor_cat import (
    FccMap,
    coequalizer,
    compose,
    coproduct,
    coproduct_mediator,
    direct_limit_window_check,
    equalizer_check,
    functoriality_check,
    generation_decompose,
    identity_map,
    induced_hom,
    pushout,
    pushout_mediator,
    reassemble,
    surjectivity_report,
    validate_fcc,
)
from .samples import (
    enumerate_posets,
    enumerate_prosets,
    irreducible_posets,
    irreducible_prosets,
    random_fcc_map,
    random_finitary,
    random_matrix,
    random_poset,
    random_proset,
)
