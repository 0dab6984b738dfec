"""Schwarzian derivatives, hyperbolic sup-norms, and sharp class bounds on the unit disk."""

from .battery import (
    degree2_battery,
    random_blaschke,
    random_mobius,
    random_pairs,
    random_schwarz,
    random_schwarz_series,
    schwarz_battery,
    series_members,
    subordination_members,
)
from .disk import (
    DieudonneReport,
    GridConfig,
    blaschke_eval,
    dieudonne_check,
    hyperbolic_distance,
    pseudo_hyperbolic,
)
from .distortion import (
    DistortionResult,
    TpdReport,
    delta_functional,
    delta_param,
    tb_extremal,
    tpd_lower,
    tpd_upper,
    verify_tpd,
)
from .errors import (
    BadParameter,
    BranchPointAtCenter,
    CenterPoint,
    CoincidentPoints,
    DivisionByNonUnit,
    NonvanishingAtZero,
    NonvanishingInner,
    OutOfRange,
    OutsideDisk,
    SchwarzlabError,
    StencilOutsideDisk,
    VanishingDerivative,
)
from .families import (
    BlaschkeProduct,
    ClassSpec,
    FAlpha,
    GBeta,
    MembershipReport,
    SchwarzFunction,
    SchwarzSeries,
    SubordinationFunction,
    b_param,
    build_from_schwarz,
    extremal_f,
    extremal_g,
    halfplane_target,
    membership_check,
    order_for_radius,
    qc_constant,
)
from .functions import (
    AnalyticFunction,
    ExtremalG,
    Jet3,
    MobiusFunction,
    PostComposed,
    SeriesFunction,
    jet,
    pre_schwarzian,
    schwarzian,
    schwarzian_fd_oracle,
)
from .norm import (
    AuxMaximizerReport,
    NormReport,
    aux_maximizer_check,
    estimate_norm,
    g_profile,
    h_profile,
    pointwise_bound_f,
    pointwise_bound_g,
    weighted_profile,
)
from .series import DEFAULT_ORDER, TaylorSeries

__version__ = "0.1.0"
