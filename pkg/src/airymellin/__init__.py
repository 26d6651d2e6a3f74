"""Mellin transforms of Ai^4, Ai^3 Bi and Ai^2 Bi^2, with exact closed forms
at integer and half-integer orders and an independent quadrature oracle."""
from .airy import AiryValues, ProductKind, airy_eval, quartic_product
from .closed_form import Basis, ClosedForm
from .errors import (
    AiryMellinError,
    AiryOverflowError,
    ConsistencyError,
    ConvergenceError,
    DegenerateParameterError,
    DomainError,
    PoleError,
)
from .mellin import (
    AlphaDecomposition,
    Family,
    Method,
    MomentResult,
    SeriesConfig,
    ai3bi_from_pq,
    mellin,
    mellin_ai2bi2,
    mellin_ai3bi,
    mellin_ai3bi_integer,
    mellin_ai4,
    mellin_ai4_integer,
    mellin_halfinteger,
    mellin_integer,
    pq_extract,
    seq_PQ,
    seq_y,
    seq_z,
)
from .quadrature import QuadratureResult, moment_quadrature, regularized_ai2bi2, regularized_ai2bi2_rational
from .scalar_special import CONSTANTS, Rational, elliptic_E, elliptic_K, gamma, pochhammer, rgamma

__version__ = "0.1.0"
