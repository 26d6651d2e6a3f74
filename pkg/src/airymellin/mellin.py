"""Mellin transforms of quartic Airy products.

    M[f](alpha, c) = int_0^inf x^(alpha-1) f(c + x) dx,
    f in {Ai^4, Ai^3 Bi, Ai^2 Bi^2}

General (alpha, c) values come from power series in c whose coefficients are
2F1 values at z = 1/4 or z = 3/4.  Integer alpha and alpha = 3m + 5/2 at
c = 0 have exact closed forms (see :mod:`airymellin.closed_form`), built
from terminating sums and from the three-term recurrence shared by the
normalised Ai^4 and Ai^3 Bi moments.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from decimal import localcontext
from fractions import Fraction
from math import comb, factorial

from . import _hp
from .airy import ProductKind
from .closed_form import Basis, ClosedForm
from .errors import ConsistencyError, ConvergenceError, DomainError
from .hyp import (
    eval_2f1_threequarters_via_quarter,
    gauss_2f1,
    gauss_2f1_regularized,
    terminating_2f1,
    terminating_4f3,
)
from .scalar_special import gamma, pochhammer, pochhammer_rational, rgamma

__all__ = [
    "Method",
    "Family",
    "SeriesConfig",
    "MomentResult",
    "AlphaDecomposition",
    "mellin_ai4",
    "mellin_ai3bi",
    "mellin_ai2bi2",
    "mellin",
    "mellin_ai4_integer",
    "mellin_ai3bi_integer",
    "mellin_integer",
    "mellin_halfinteger",
    "seq_PQ",
    "recurrence_solutions",
    "seq_y",
    "seq_z",
    "seq_y_representation",
    "seq_z_representation",
    "pq_extract",
    "ai3bi_from_pq",
]

log = logging.getLogger(__name__)

_PI_32 = math.pi ** 1.5
_EPS = 2.0 ** -52


class Method(str, enum.Enum):
    SERIES_C = "series_c"
    INTEGER_FORM = "integer_form"
    HALF_INTEGER_FORM = "half_integer_form"
    QUADRATURE = "quadrature"


class Family(str, enum.Enum):
    """alpha modulo 3 for the integer closed forms."""

    F1 = "3m+1"
    F2 = "3m+2"
    F3 = "3m+3"

    @classmethod
    def of(cls, alpha: int) -> tuple["Family", int]:
        m, r = divmod(int(alpha) - 1, 3)
        return (cls.F1, cls.F2, cls.F3)[r], m


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-15
    max_terms: int = 400
    c_max: float = 8.0

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("SeriesConfig.tol must be positive")
        if self.max_terms < 1:
            raise DomainError("SeriesConfig.max_terms must be positive")


@dataclass(frozen=True)
class MomentResult:
    value: float
    abs_error_estimate: float
    terms_used: int
    method: Method
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class AlphaDecomposition:
    """alpha = 3m + beta with m >= 0 and beta in (0, 3]; b = (beta + 2)/3."""

    alpha: float
    m: int
    beta: float
    b: float

    @classmethod
    def from_alpha(cls, alpha) -> "AlphaDecomposition":
        if not alpha > 0:
            raise DomainError(f"alpha must be positive, got {alpha!r}")
        m = max(0, math.ceil(alpha / 3) - 1)
        beta = alpha - 3 * m
        return cls(alpha, m, beta, (beta + 2) / 3)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return alpha


def _cospi(x: float) -> float:
    r = math.fmod(x, 2.0)
    if r == 0.5 or r == 1.5 or r == -0.5 or r == -1.5:
        return 0.0
    return math.cos(math.pi * r)


def _sum_c_series(term, c: float, cfg: SeriesConfig) -> MomentResult:
    """Sum term(n) * c**n / n! (the caller's term includes the sign)."""
    warn = ()
    if abs(c) > cfg.c_max:
        msg = f"|c| = {abs(c)} exceeds c_max = {cfg.c_max}; expect cancellation"
        log.warning(msg)
        warn = (msg,)
    if c == 0:
        v = term(0)
        return MomentResult(v, 4 * _EPS * abs(v), 1, Method.SERIES_C, warn)
    terms = []
    total = 0.0
    small = 0
    power = 1.0  # c**n / n!
    for n in range(cfg.max_terms):
        t = term(n) * power
        terms.append(t)
        total += t
        if n >= 2 and abs(t) <= cfg.tol * abs(total):
            small += 1
            if small >= 3:
                value = math.fsum(terms)
                omitted = abs(term(n + 1) * power * c / (n + 1))
                err = 10 * omitted + 4 * _EPS * math.fsum(abs(x) for x in terms)
                return MomentResult(value, err, n + 1, Method.SERIES_C, warn)
        else:
            small = 0
        power *= c / (n + 1)
    raise ConvergenceError(f"c-series not converged in {cfg.max_terms} terms (c={c})")


def mellin_ai4(alpha: float, c: float = 0.0, cfg: SeriesConfig | None = None) -> MomentResult:
    """int_0^inf x^(alpha-1) Ai^4(c+x) dx for alpha > 0 and real c.

    Series in c with coefficients
    48^((n-alpha-2)/3) (-1)^n 2F1((alpha+2-n)/3, 1/2; (2alpha+7-2n)/6 | 1/4) / Gamma((2alpha+7-2n)/6),
    the 2F1/Gamma ratio being summed in regularized form so the poles of
    the denominator parameter need no special casing.
    """
    alpha = _check_alpha(alpha)
    cfg = cfg or SeriesConfig()
    pref = gamma(alpha) / _PI_32

    def term(n: int) -> float:
        reg = gauss_2f1_regularized((alpha + 2 - n) / 3, 0.5, (2 * alpha + 7 - 2 * n) / 6, 0.25)
        return pref * 48.0 ** ((n - alpha - 2) / 3) * (-1) ** n * reg

    return _sum_c_series(term, float(c), cfg)


def mellin_ai3bi(alpha: float, c: float = 0.0, cfg: SeriesConfig | None = None) -> MomentResult:
    """int_0^inf x^(alpha-1) Ai^3(c+x) Bi(c+x) dx for alpha > 0 and real c."""
    alpha = _check_alpha(alpha)
    cfg = cfg or SeriesConfig()
    pref = gamma(alpha) / (2 * math.pi)

    def term(n: int) -> float:
        rg = rgamma((alpha + 2 - n) / 3)
        if rg == 0.0:
            return 0.0
        f = eval_2f1_threequarters_via_quarter((n + 1 - alpha) / 3)
        return pref * 12.0 ** ((n - alpha - 2) / 3) * (-1) ** n * rg * f

    return _sum_c_series(term, float(c), cfg)


def mellin_ai2bi2(alpha: float, c: float = 0.0, cfg: SeriesConfig | None = None) -> MomentResult:
    """int_0^inf x^(alpha-1) Ai^2(c+x) Bi^2(c+x) dx, convergent for 0 < alpha < 1.

    The Ai^4 moment minus a correction series whose coefficients carry
    cos(pi (2n+2+alpha)/3).
    """
    alpha = _check_alpha(alpha)
    if not alpha < 1.0:
        raise DomainError(f"the Ai^2 Bi^2 moment diverges for alpha >= 1 (alpha={alpha})")
    cfg = cfg or SeriesConfig()
    base = mellin_ai4(alpha, c, cfg)
    pref = gamma(alpha) / math.pi ** 2

    def term(n: int) -> float:
        a = (n + 1 - alpha) / 3
        cosine = _cospi((2 * n + 2 + alpha) / 3)
        if cosine == 0.0:
            return 0.0
        return -pref * gamma(a) * 12.0 ** ((n - alpha - 2) / 3) * cosine * eval_2f1_threequarters_via_quarter(a)

    corr = _sum_c_series(term, float(c), cfg)
    return MomentResult(
        base.value + corr.value,
        base.abs_error_estimate + corr.abs_error_estimate,
        base.terms_used + corr.terms_used,
        Method.SERIES_C,
        base.warnings,
    )


def mellin(kind: ProductKind, alpha: float, c: float = 0.0, cfg: SeriesConfig | None = None) -> MomentResult:
    """Dispatch on the product kind."""
    kind = ProductKind(kind)
    fn = {ProductKind.AI4: mellin_ai4, ProductKind.AI3BI: mellin_ai3bi, ProductKind.AI2BI2: mellin_ai2bi2}[kind]
    return fn(alpha, c, cfg)


# ---------------------------------------------------------------------------
# Integer alpha

_HALF = Fraction(1, 2)


def _integer_alpha(alpha) -> int:
    if int(alpha) != alpha or alpha < 1:
        raise DomainError(f"closed forms need a positive integer alpha, got {alpha!r}")
    return int(alpha)


def _f1_parts(m: int) -> tuple[Fraction, Fraction, Fraction]:
    coef = Fraction(factorial(3 * m), 12 ** m * factorial(m) * 24)
    F = terminating_2f1(m, _HALF, 1, Fraction(3, 4))
    S = Fraction(0)
    for k in range(1, m + 1):
        inner = sum(Fraction(3, 16) ** (k - n) / (2 * n * comb(2 * n, n)) for n in range(1, k + 1))
        S += (-1) ** k * comb(m, k) * comb(2 * k, k) * inner
    return coef, F, S


def _four_f3_pair(m: int, family: Family) -> tuple[Fraction, Fraction]:
    F = Fraction
    if family is Family.F2:
        first = terminating_4f3([F(-m, 2), F(-(m + 1), 2), F(1, 6), m + 1], [F(1, 3), F(2, 3), F(2, 3)])
        second = terminating_4f3([-m, F(5, 6), F(m + 2, 2), F(m + 3, 2)], [F(4, 3), F(4, 3), F(5, 3)])
    else:
        first = terminating_4f3([-(m + 1), F(1, 6), F(m + 1, 2), F(m + 2, 2)], [F(1, 3), F(2, 3), F(2, 3)])
        second = terminating_4f3([F(-m, 2), F(-(m - 1), 2), F(5, 6), m + 2], [F(4, 3), F(4, 3), F(5, 3)])
    return first, second


def mellin_ai4_integer(alpha: int) -> ClosedForm:
    """Exact Ai^4 moment at c = 0 for a positive integer alpha.

    3m+1: (p ln3 + q)/pi^2;  3m+2: (p - q k^3)/(pi^2 k);  3m+3: (p - 2q k^3)/(3 pi^2 k^2)
    with k the constant -Ai'(0)/Ai(0) and p, q rational.
    """
    family, m = Family.of(_integer_alpha(alpha))
    if family is Family.F1:
        coef, F, S = _f1_parts(m)
        return ClosedForm.build({Basis.LN3: coef * F, Basis.ONE: coef * S}, pi_power=2)
    A, B = _four_f3_pair(m, family)
    if family is Family.F2:
        N = Fraction(factorial(3 * m + 1), 2 ** (4 * m + 5) * 3 ** (m + 1)) / pochhammer_rational(Fraction(4, 3), m)
        return ClosedForm.build(
            {Basis.KAPPA_INV: 2 * A * N,
             Basis.KAPPA2: -Fraction(2) ** (2 * m - 1) * (3 * m + 2) * (3 * m + 3) * B * N},
            pi_power=2,
        )
    N = Fraction(factorial(3 * m + 2), 2 ** (4 * m + 7) * 3 ** (m + 2)) / pochhammer_rational(Fraction(2, 3), m + 1)
    return ClosedForm.build(
        {Basis.KAPPA_INV2: 2 ** (2 * m + 3) * A * N,
         Basis.KAPPA: -Fraction((3 * m + 3) * (3 * m + 4), 2) * B * N},
        pi_power=2,
    )


def mellin_ai3bi_integer(alpha: int) -> ClosedForm:
    """Exact Ai^3 Bi moment at c = 0 for a positive integer alpha."""
    family, m = Family.of(_integer_alpha(alpha))
    if family is Family.F1:
        coef, F, _ = _f1_parts(m)
        return ClosedForm.build({Basis.ONE: coef * F}, pi_power=1)
    A, B = _four_f3_pair(m, family)
    if family is Family.F2:
        R = 1 / (192 * 12 ** m * pochhammer_rational(Fraction(4, 3), m))
        return ClosedForm.build(
            {Basis.KAPPA2: factorial(3 * m + 3) * B * R,
             Basis.KAPPA_INV: factorial(3 * m + 1) * A / Fraction(2) ** (2 * m - 1) * R},
            pi_power=2, sqrt3=1,
        )
    R = 1 / (96 * 12 ** m * pochhammer_rational(Fraction(5, 3), m))
    return ClosedForm.build(
        {Basis.KAPPA_INV2: factorial(3 * m + 2) * A * R,
         Basis.KAPPA: Fraction(factorial(3 * m + 4), 2 ** (2 * m + 5)) * B * R},
        pi_power=2, sqrt3=1,
    )


def mellin_integer(kind: ProductKind, alpha: int) -> ClosedForm:
    kind = ProductKind(kind)
    if kind is ProductKind.AI4:
        return mellin_ai4_integer(alpha)
    if kind is ProductKind.AI3BI:
        return mellin_ai3bi_integer(alpha)
    raise DomainError("no integer-order closed form for the Ai^2 Bi^2 moment")


def pq_extract(family: Family, m: int) -> tuple[Fraction, Fraction]:
    """Rational (p, q) of the Ai^4 moment at alpha = 3m+1, 3m+2 or 3m+3."""
    family = Family(family)
    alpha = 3 * m + {Family.F1: 1, Family.F2: 2, Family.F3: 3}[family]
    cf = mellin_ai4_integer(alpha)
    if family is Family.F1:
        return cf.coefficient(Basis.LN3), cf.coefficient(Basis.ONE)
    if family is Family.F2:
        return cf.coefficient(Basis.KAPPA_INV), -cf.coefficient(Basis.KAPPA2)
    return 3 * cf.coefficient(Basis.KAPPA_INV2), -Fraction(3, 2) * cf.coefficient(Basis.KAPPA)


def ai3bi_from_pq(family: Family, p: Fraction, q: Fraction) -> ClosedForm:
    """The Ai^3 Bi moment of the same alpha, rebuilt from the Ai^4 pair (p, q).

    3m+1: p/pi;  3m+2: (p + 2q k^3) sqrt3/(2 pi^2 k);  3m+3: (p + q k^3) sqrt3/(3 pi^2 k^2).
    """
    family = Family(family)
    if family is Family.F1:
        return ClosedForm.build({Basis.ONE: p}, pi_power=1)
    if family is Family.F2:
        return ClosedForm.build({Basis.KAPPA_INV: p / 2, Basis.KAPPA2: q}, pi_power=2, sqrt3=1)
    return ClosedForm.build({Basis.KAPPA_INV2: p / 3, Basis.KAPPA: q / 3}, pi_power=2, sqrt3=1)


# ---------------------------------------------------------------------------
# Shared recurrence 4(m+b)^2 f[m+1] - 5(m+b-1/2) f[m] + f[m-1] = 0

def recurrence_solutions(m_max: int, b) -> tuple[list, list]:
    """P[0..m_max], Q[0..m_max]: solutions with (P0, P1) = (1, 0), (Q0, Q1) = (0, 1).

    Exact for rational ``b``.
    """
    if m_max < 0:
        raise DomainError("m must be nonnegative")
    if isinstance(b, float):
        b = Fraction(b)
    P = [Fraction(1), Fraction(0)]
    Q = [Fraction(0), Fraction(1)]
    for m in range(1, m_max):
        d = 4 * (m + b) ** 2
        w = 5 * (m + b - _HALF)
        P.append((w * P[m] - P[m - 1]) / d)
        Q.append((w * Q[m] - Q[m - 1]) / d)
    return P[: m_max + 1], Q[: m_max + 1]


def seq_PQ(m: int, b) -> tuple[Fraction, Fraction]:
    """(P_m(b), Q_m(b))."""
    P, Q = recurrence_solutions(max(m, 1), b)
    return P[m], Q[m]


def _b_exact(beta) -> Fraction:
    beta = Fraction(beta)
    if not 0 < beta <= 3:
        raise DomainError(f"beta must lie in (0, 3], got {beta}")
    return (beta + 2) / 3


def _y_direct(m: int, b: float) -> float:
    return gauss_2f1(m + b, 0.5, m + b + 0.5, 0.25) / (4.0 ** m * pochhammer(b + 0.5, m))


def _z_direct(m: int, b: float) -> float:
    return gauss_2f1(1 - b - m, 0.5, 1.0, 0.75) / pochhammer(b, m)


def seq_y_representation(m: int, beta) -> float:
    """y_0 P_m + y_1 Q_m, with y_0, y_1 and the sum in extended precision.

    y_m is the recessive solution of the recurrence, so this combination
    cancels by roughly 4**m and cannot be formed in double precision.
    """
    b = _b_exact(beta)
    P, Q = seq_PQ(m, b)
    with localcontext() as ctx:
        ctx.prec = _hp.PREC
        y0 = _hp.hyp2f1(b, _HALF, b + _HALF, Fraction(1, 4))
        y1 = _hp.hyp2f1(b + 1, _HALF, b + Fraction(3, 2), Fraction(1, 4)) / (4 * _hp.dec(b + _HALF))
        return float(y0 * _hp.dec(P) + y1 * _hp.dec(Q))


def seq_z_representation(m: int, beta) -> float:
    """z_0 P_m + z_1 Q_m in extended precision."""
    b = _b_exact(beta)
    P, Q = seq_PQ(m, b)
    with localcontext() as ctx:
        ctx.prec = _hp.PREC
        z0 = _hp.hyp2f1(1 - b, _HALF, 1, Fraction(3, 4))
        z1 = _hp.hyp2f1(-b, _HALF, 1, Fraction(3, 4)) / _hp.dec(b)
        return float(z0 * _hp.dec(P) + z1 * _hp.dec(Q))


def _dual(direct: float, rep: float, name: str) -> float:
    if abs(direct - rep) > 1e-9 * max(abs(rep), abs(direct)):
        raise ConsistencyError(f"{name}: direct {direct!r} vs recurrence {rep!r}")
    return direct


def seq_y(m: int, beta) -> float:
    """y_m(beta) = 2F1(m+b, 1/2; m+b+1/2 | 1/4) / (4^m (b+1/2)_m), checked against P/Q."""
    b = float(_b_exact(beta))
    return _dual(_y_direct(m, b), seq_y_representation(m, beta), f"y_{m}({beta})")


def seq_z(m: int, beta) -> float:
    """z_m(beta) = 2F1(1-b-m, 1/2; 1 | 3/4) / (b)_m, checked against P/Q."""
    b = float(_b_exact(beta))
    return _dual(_z_direct(m, b), seq_z_representation(m, beta), f"z_{m}({beta})")


def mellin_halfinteger(kind: ProductKind, m: int) -> ClosedForm:
    """Exact moment at alpha = 3m + 5/2, c = 0, over complete elliptic integrals.

    Ai^4: K(1/2), E(1/2);  Ai^3 Bi: K(sqrt3/2), E(sqrt3/2)  (modulus convention).
    The m-dependence enters only through P_m(3/2), Q_m(3/2).
    """
    kind = ProductKind(kind)
    if m < 0:
        raise DomainError("m must be nonnegative")
    P, Q = seq_PQ(m, Fraction(3, 2))
    if kind is ProductKind.AI4:
        # y0 = (16/pi)(K - E), y1 = (8/(9 pi))(9K - 10E)
        R = Fraction(factorial(6 * m + 4), 2 ** (8 * m + 10) * 3 ** (m + 2) * factorial(3 * m + 2))
        return ClosedForm.build(
            {Basis.K_HALF: R * (16 * P + 8 * Q), Basis.E_HALF: -R * (16 * P + Fraction(80, 9) * Q)},
            pi_power=2, sqrt3=1,
        )
    if kind is ProductKind.AI3BI:
        # z0 = (2/pi) E', z1 = (10E' - K')/(9 pi)
        R = Fraction(factorial(6 * m + 4), 2 ** (8 * m + 7) * 3 ** (m + 2) * factorial(3 * m + 2))
        return ClosedForm.build(
            {Basis.K_ROOT3_HALF: -R * Q / 9, Basis.E_ROOT3_HALF: R * (2 * P + Fraction(10, 9) * Q)},
            pi_power=2, sqrt3=1,
        )
    raise DomainError("no half-integer closed form for the Ai^2 Bi^2 moment")
