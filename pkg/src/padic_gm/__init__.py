"""Exact p-adic families of nearly overconvergent modular forms (q-expansion model)."""
from .connection import (
    DIAGONAL,
    KATZ,
    KATZ_PAPER,
    SERRE,
    NearlyOCForm,
    SplittingModel,
    change_coordinates,
    diagonal_splitting,
    get_splitting,
    katz_paper_splitting,
    katz_splitting,
    matrix_identity_check,
    nabla,
    nabla_classical,
    partial_chi,
    partial_pow,
    serre_splitting,
    specialize_form,
    splitting_update,
)
from .errors import (
    CalibrationError,
    CoordinateError,
    DomainError,
    NotEigenError,
    PadicGMError,
    PrecisionError,
    SchemaError,
    UnsupportedError,
)
from .hecke import HeckeOp, calibrate_lambda, eigenvalue, t_ell, u_p, v_p
from .padic import FamilyElement, PadicInt, PrecisionProfile, binom_series, pexp, plog, teichmueller
from .qseries import QSeries, delta, eisenstein_classical, eisenstein_e2, eisenstein_preset, sigma, theta
from .weights import (
    Character,
    analytic_level,
    char_section_series,
    classical_char,
    eval_char,
    universal_char,
    weight_point,
    wt,
)

__version__ = "0.1.0"
