"""Exact classification machinery for admissible affine highest weights.

Core layers:

  * ``finite``: root systems of the simple Lie algebras, exact Weyl data;
  * ``affine``: real affine roots, weights with level and delta tracking,
    the extended affine Weyl group and its dot action;
  * ``admissibility``: admissible numbers, integral root systems and their
    simple roots, the admissible-weight test;
  * ``classify``: level contexts, family enumeration, the module-membership
    oracle, rank-one reduction data, and orbit moves.

A FastAPI service (``admissible_weights.service``) wraps the core, and the
``admw`` CLI is a thin client of the same handlers.
"""

from .admissibility import (
    AdmissibilityReport,
    IntegralRootSystem,
    LevelCertificate,
    ResidueClass,
    integral_root_membership,
    is_admissible_number,
    is_admissible_weight,
    isomorphic_integral_systems,
    simple_integral_roots,
    vacuum_weight,
)
from .affine import (
    AffineWeight,
    ExtendedWeylElement,
    RealRoot,
    act_on_root,
    act_on_weight,
    affine_simple_roots,
    compose,
    coroot_pairing,
    dot_action,
    element_from_word,
    identity_element,
    inverse_element,
    inversion_set,
    is_positive_real_root,
    permutes_simple_affine_roots,
    rho_hat,
    simple_affine_reflection,
    translation_element,
)
from .classify import (
    AdmissibleLevelContext,
    BatteryReport,
    ClassificationReport,
    MoveResult,
    ReductionDatum,
    diagram_twist_group,
    duflo_joseph_move,
    is_module_over_simple_vertex_algebra,
    kostant_subset,
    level_context,
    necessary_condition_battery,
    reduction_data,
    sl2_reduction_admissible,
)
from .errors import (
    CriticalLevelError,
    DomainError,
    GroupTooLargeError,
    LieTypeError,
    NotAdmissibleError,
    RationalSyntaxError,
    SearchBoundError,
)
from .finite import (
    FiniteRootSystem,
    FiniteWeylElement,
    LieType,
    build_root_system,
    dominant_integral_weights,
    reflect,
    weyl_elements,
    weyl_order,
)

__version__ = "0.1.0"
