"""Generalized Euler identities: trigonometric-like functions of quadratic
and cubic units, closed-form matrix exponentials, and related special
functions."""
from ._accel import USE_NUMBA
from .bessel2 import (
    BesselParams,
    bessel2_eval,
    bessel2_theta_recurrence_residual,
    bessel2_x_recurrence_residual,
)
from .companion import CharPoly, TLFVector, char_poly, companion_matrix, exp_n, tlf_vector
from .cubic import (
    CubicUnit,
    TLFTriple,
    cubic_identity_residual,
    cubic_roots,
    eisenstein_e,
    eval_a,
    eval_a2,
    evolution_matrix3,
    exp_rotation_generator,
)
from .errors import (
    AccuracyWarning,
    DomainError,
    GenEulerError,
    NumericError,
    RangeError,
    TruncationWarning,
)
from .gtrig import (
    ConicClass,
    ConicKind,
    QuadraticUnit,
    TLFPair,
    add_angles,
    classify_conic,
    eval_cs,
    eval_cs_from_roots,
    tabulate_cs,
    unit_roots,
)
from .hypercomplex import (
    HypercomplexNumber,
    PowerSeries,
    analytic_eval,
    cauchy_riemann_residual,
    hc_exp,
    hc_mul,
    wave_pde_residual,
)
from .matrix_exp2 import Matrix2Exp, det_identity_residual, exp2, exp_unit_matrix
from .oracles import OracleConfig, expm_oracle, fd_derivative, poly_roots

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "BesselParams",
    "CharPoly",
    "ConicClass",
    "ConicKind",
    "CubicUnit",
    "DomainError",
    "GenEulerError",
    "HypercomplexNumber",
    "Matrix2Exp",
    "NumericError",
    "OracleConfig",
    "PowerSeries",
    "QuadraticUnit",
    "RangeError",
    "TLFPair",
    "TLFTriple",
    "TLFVector",
    "TruncationWarning",
    "USE_NUMBA",
    "add_angles",
    "analytic_eval",
    "bessel2_eval",
    "bessel2_theta_recurrence_residual",
    "bessel2_x_recurrence_residual",
    "cauchy_riemann_residual",
    "char_poly",
    "classify_conic",
    "companion_matrix",
    "cubic_identity_residual",
    "cubic_roots",
    "det_identity_residual",
    "eisenstein_e",
    "eval_a",
    "eval_a2",
    "eval_cs",
    "eval_cs_from_roots",
    "evolution_matrix3",
    "exp2",
    "exp_n",
    "exp_rotation_generator",
    "exp_unit_matrix",
    "expm_oracle",
    "fd_derivative",
    "hc_exp",
    "hc_mul",
    "poly_roots",
    "tabulate_cs",
    "tlf_vector",
    "unit_roots",
    "wave_pde_residual",
    "__version__",
]
