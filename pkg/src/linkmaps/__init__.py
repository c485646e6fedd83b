"""Exact algebra for link maps of two 2-spheres in the 4-sphere.

Invariant pairs over the Laurent ring, metabolic intersection forms on the
complement of a standard immersion, realization of any admissible pair by
an explicit presentation, and a verified algebraic unlinking pipeline with
step-by-step certificates.
"""

from .errors import (
    ConditionsNotMet,
    ConstructionFailed,
    DimensionMismatch,
    InternalVerificationFailure,
    InvalidPair,
    InvalidPresentation,
    KindMismatch,
    LinkmapsError,
    NotApplicable,
    NotDivisible,
    NotInCone,
    PreconditionViolated,
    WitnessInvalid,
)
from .laurent import (
    LaurentPoly,
    ONE,
    ONE_MINUS_X,
    X,
    Z,
    ZERO,
    ZPoly,
    embed,
    exact_div_one_minus_x,
    exact_div_z,
    i_adic_expand,
    i_adic_order,
    monomial,
    z_decompose,
)
from .forms import (
    HermitianForm,
    IsometryMatrix,
    divide_form_by_z,
    evaluate,
    is_congruent_to_identity_mod_z,
    is_hermitian,
    is_unimodular,
    transvection,
    verify_isometry,
)
from .pi2 import (
    ACCESSORY_PM,
    BasisKind,
    SphereClass,
    WHITNEY_ACCESSORY,
    accessory_pm_sphere,
    accessory_sphere,
    change_basis,
    check_metabolic_collection,
    check_unlinking_conditions,
    lam,
    metabolic_form,
    whitney_disk_pairing,
    whitney_sphere,
    zero_class,
)
from .kirk import JKInput, KirkPair, difference_map, is_trivial, jk_kirk, make_kirk
from .realize import (
    Pair,
    Presentation,
    invariants_of,
    realize,
    realize_sigma1,
    realize_sigma2_correction,
    sigma1_of,
    sigma2_of,
)
from .diskledger import (
    DiskRecord,
    Multiplicities,
    derive_accessory_twist,
    double_boundary_twist,
    join_accessory_twists,
    multiplicities,
    parity_claim,
    step8_z2_coefficient,
    whitney_move_effect,
)
from .unlink import (
    IsometryWitness,
    UnlinkCertificate,
    Verdict,
    classify,
    construct_isometry,
    reduce,
    stabilize,
    verify_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
