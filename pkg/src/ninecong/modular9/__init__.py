"""Level-9 modular curves: X(9), the twisted models X_E^{+-}(9) and the forgetful map."""
from .action import (
    ActionReport,
    apply_matrix,
    forget_invariant,
    kernel_generators,
    preserves_ideal,
    projective_order,
    rho_S,
    rho_T,
    sl2_action_check,
)
from .identities import (
    BridgeReport,
    FactorizationFailed,
    GeomIdentityResult,
    bridge_matrix,
    hessian_pencil_factorization,
    hessian_pencil_universal,
    scale_check_model,
    scaling_identities,
    tangent_hessian_identity,
    torsion_bridge,
)
from .models import (
    ABCD,
    UVWS,
    XYZT,
    CubicPairModel,
    ProjPt,
    c4_c6_from_short,
    short_coefficients_from_torsion,
    torsion_model,
    twisted_model,
    universal_forget,
    universal_model,
)
from .tangent import (
    CuspPoint,
    DegenerateLambda,
    NotOnModel,
    SingularPoint,
    TangentExpansion,
    forget9,
    forget9_on_model,
    lambda_matrix,
    nine_congruent_curve,
    short_coefficients,
    tangent_direction,
    tangent_expansion,
)

__all__ = [
    "ABCD",
    "ActionReport",
    "BridgeReport",
    "CubicPairModel",
    "CuspPoint",
    "DegenerateLambda",
    "FactorizationFailed",
    "GeomIdentityResult",
    "NotOnModel",
    "ProjPt",
    "SingularPoint",
    "TangentExpansion",
    "UVWS",
    "XYZT",
    "apply_matrix",
    "bridge_matrix",
    "c4_c6_from_short",
    "forget9",
    "forget9_on_model",
    "forget_invariant",
    "hessian_pencil_factorization",
    "hessian_pencil_universal",
    "kernel_generators",
    "lambda_matrix",
    "nine_congruent_curve",
    "preserves_ideal",
    "projective_order",
    "rho_S",
    "rho_T",
    "scale_check_model",
    "scaling_identities",
    "short_coefficients",
    "short_coefficients_from_torsion",
    "sl2_action_check",
    "tangent_direction",
    "tangent_expansion",
    "tangent_hessian_identity",
    "torsion_bridge",
    "torsion_model",
    "twisted_model",
    "universal_forget",
    "universal_model",
]
