"""Coordinate law of a uniform random point in the unit n-ball.

Exact marginal density, CDF, quantiles and moments of one Cartesian
coordinate; unit-ball volumes; the characteristic function of the
rescaled coordinate in three independently computable forms; seeded
samplers; and convergence diagnostics against the standard normal limit.
"""

from .charfn import (
    charfn_bessel,
    charfn_gauss_limit,
    charfn_hyp,
    charfn_quad,
)
from .convergence import (
    DEFAULT_DIMS,
    ConvergenceReport,
    GofReport,
    build_report,
    cf_sup_distance,
    g_pdf,
    ks_test,
    normal_pdf,
    pdf_sup_distance,
)
from .geometry import (
    ball_volume,
    ball_volume_by_recursion,
    cube_ratio,
    log_ball_volume,
)
from .marginal import MarginalDist
from .quadrature import QuadratureError
from .sampling import (
    BallPoint,
    RngStream,
    SampleMethod,
    acceptance_fraction,
    rescale_z,
    sample_coordinate,
    sample_dir_radius,
    sample_reject_cube,
)
from .specialfn import (
    NonConvergenceError,
    SeriesControl,
    bessel_j,
    gamma,
    hyp0f1,
    log_gamma,
    pochhammer,
    reg_inc_beta,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BallPoint",
    "ConvergenceReport",
    "DEFAULT_DIMS",
    "GofReport",
    "MarginalDist",
    "NonConvergenceError",
    "QuadratureError",
    "RngStream",
    "SampleMethod",
    "SeriesControl",
    "acceptance_fraction",
    "ball_volume",
    "ball_volume_by_recursion",
    "bessel_j",
    "build_report",
    "cf_sup_distance",
    "charfn_bessel",
    "charfn_gauss_limit",
    "charfn_hyp",
    "charfn_quad",
    "cube_ratio",
    "g_pdf",
    "gamma",
    "hyp0f1",
    "ks_test",
    "log_ball_volume",
    "log_gamma",
    "normal_pdf",
    "pdf_sup_distance",
    "pochhammer",
    "reg_inc_beta",
    "rescale_z",
    "sample_coordinate",
    "sample_dir_radius",
    "sample_reject_cube",
]
