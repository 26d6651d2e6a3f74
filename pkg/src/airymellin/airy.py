"""Airy functions Ai, Bi and their derivatives on the real line.

For |x| <= 12 the two Maclaurin solutions are summed in 60-digit decimal
arithmetic, which absorbs the cancellation in Ai for positive x.  Outside
that window the Poincare asymptotic expansions are used: exponentially
scaled for x > 12 and modulus/phase form for x < -12.  At |x| = 12 the
asymptotic series are accurate far beyond double precision, so the two
branches agree to rounding.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext

from . import _hp
from .errors import AiryOverflowError, DomainError

__all__ = [
    "ProductKind",
    "AiryValues",
    "airy_eval",
    "airy_scaled",
    "quartic_product",
    "log_quartic_product",
]

SERIES_LIMIT = 12.0
X_MIN = -200.0
X_MAX = 200.0
_LOG_SCALE_FROM = 30.0
_SQRT_PI = math.sqrt(math.pi)
_EXP_MAX = 709.78


class ProductKind(str, enum.Enum):
    AI4 = "ai4"
    AI3BI = "ai3bi"
    AI2BI2 = "ai2bi2"

    @property
    def powers(self) -> tuple[int, int]:
        """(power of Ai, power of Bi)."""
        return {"ai4": (4, 0), "ai3bi": (3, 1), "ai2bi2": (2, 2)}[self.value]


@dataclass(frozen=True)
class AiryValues:
    ai: float
    ai_prime: float
    bi: float
    bi_prime: float
    at: float

    @property
    def wronskian(self) -> float:
        return self.ai * self.bi_prime - self.ai_prime * self.bi


def _asymptotic_coefficients(n: int) -> tuple[list[float], list[float]]:
    u = [1.0]
    for k in range(1, n):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k))
    v = [1.0] + [-(6 * k + 1) / (6 * k - 1) * u[k] for k in range(1, n)]
    return u, v


_U, _V = _asymptotic_coefficients(60)


def _inverse_power_sum(coeffs, w: float, sign: float = 1.0, start: int = 0, step: int = 1) -> float:
    """sum_j sign**j * coeffs[start + step*j] * w**j, truncated at the smallest term."""
    total = 0.0
    wj = 1.0
    s = 1.0
    last = math.inf
    for idx in range(start, len(coeffs), step):
        term = s * coeffs[idx] * wj
        if abs(term) > last:
            break
        total += term
        if abs(term) <= 1e-18 * abs(total):
            break
        last = abs(term)
        wj *= w
        s *= sign
    return total


def _maclaurin(x: float) -> tuple[float, float, float, float]:
    with localcontext() as ctx:
        ctx.prec = _hp.PREC
        X = Decimal(x)
        X3 = X * X * X
        f = fk = Decimal(1)
        g = gk = X
        fp = fpk = X * X / 2
        gp = gpk = Decimal(1)
        k = 0
        eps = Decimal(10) ** (-(_hp.PREC - 4))
        while True:
            fk = fk * X3 / ((3 * k + 2) * (3 * k + 3))
            gk = gk * X3 / ((3 * k + 3) * (3 * k + 4))
            fpk = fpk * X3 / ((3 * k + 3) * (3 * k + 5))
            gpk = gpk * X3 / ((3 * k + 1) * (3 * k + 3))
            f += fk
            g += gk
            fp += fpk
            gp += gpk
            k += 1
            scale = abs(f) + abs(g) + abs(fp) + abs(gp)
            if abs(fk) + abs(gk) + abs(fpk) + abs(gpk) <= eps * scale:
                break
        c1 = _hp.AI0
        c2 = _hp.MINUS_AIP0
        r3 = _hp.sqrt3()
        ai = c1 * f - c2 * g
        aip = c1 * fp - c2 * gp
        bi = r3 * (c1 * f + c2 * g)
        bip = r3 * (c1 * fp + c2 * gp)
        return float(ai), float(aip), float(bi), float(bip)


def _asymptotic_positive(x: float) -> tuple[float, float, float, float, float]:
    zeta = 2.0 / 3.0 * x * math.sqrt(x)
    w = 1.0 / zeta
    q = x ** 0.25
    su_alt = _inverse_power_sum(_U, w, -1.0)
    sv_alt = _inverse_power_sum(_V, w, -1.0)
    su = _inverse_power_sum(_U, w)
    sv = _inverse_power_sum(_V, w)
    ai = su_alt / (2.0 * _SQRT_PI * q)
    aip = -q * sv_alt / (2.0 * _SQRT_PI)
    bi = su / (_SQRT_PI * q)
    bip = q * sv / _SQRT_PI
    return ai, aip, bi, bip, zeta


def _asymptotic_negative(x: float) -> tuple[float, float, float, float]:
    t = -x
    zeta = 2.0 / 3.0 * t * math.sqrt(t)
    w = 1.0 / zeta
    w2 = w * w
    q = t ** 0.25
    theta = zeta - 0.25 * math.pi
    c, s = math.cos(theta), math.sin(theta)
    ue = _inverse_power_sum(_U, w2, -1.0, 0, 2)
    uo = w * _inverse_power_sum(_U, w2, -1.0, 1, 2)
    ve = _inverse_power_sum(_V, w2, -1.0, 0, 2)
    vo = w * _inverse_power_sum(_V, w2, -1.0, 1, 2)
    ai = (c * ue + s * uo) / (_SQRT_PI * q)
    aip = q * (s * ve - c * vo) / _SQRT_PI
    bi = (-s * ue + c * uo) / (_SQRT_PI * q)
    bip = q * (c * ve + s * vo) / _SQRT_PI
    return ai, aip, bi, bip


def airy_scaled(x: float) -> tuple[float, float, float, float, float]:
    """Return ``(ai, ai', bi, bi', zeta)`` with Ai = ai*exp(-zeta), Bi = bi*exp(zeta).

    ``zeta`` is (2/3) x**1.5 for x > 12 and 0 otherwise, so the scaled
    values stay in range for every x up to the double-precision limit.
    """
    x = float(x)
    if not math.isfinite(x) or x < X_MIN:
        raise DomainError(f"Airy evaluation needs x >= {X_MIN}, got {x!r}")
    if x > SERIES_LIMIT:
        return _asymptotic_positive(x)
    if x < -SERIES_LIMIT:
        return (*_asymptotic_negative(x), 0.0)
    return (*_maclaurin(x), 0.0)


def airy_eval(x: float) -> AiryValues:
    """Ai, Ai', Bi, Bi' at a real abscissa with |x| <= 200."""
    x = float(x)
    if x > X_MAX:
        raise DomainError(f"Airy evaluation needs |x| <= {X_MAX}, got {x!r}")
    ai, aip, bi, bip, zeta = airy_scaled(x)
    if zeta:
        if zeta > _EXP_MAX:
            raise AiryOverflowError(f"Bi({x}) exceeds the floating-point range")
        up, down = math.exp(zeta), math.exp(-zeta)
        ai, aip, bi, bip = ai * down, aip * down, bi * up, bip * up
    return AiryValues(ai, aip, bi, bip, x)


def log_quartic_product(x: float, kind: ProductKind) -> tuple[float, float]:
    """(sign, log|P|) of the quartic product; finite for every x >= -200."""
    kind = ProductKind(kind)
    p, q = kind.powers
    ai, _, bi, _, zeta = airy_scaled(x)
    if ai == 0.0 or (q and bi == 0.0):
        return 0.0, -math.inf
    sign = math.copysign(1.0, ai) ** p * (math.copysign(1.0, bi) ** q if q else 1.0)
    logp = p * math.log(abs(ai)) + (q * math.log(abs(bi)) if q else 0.0) + (q - p) * zeta
    return sign, logp


def quartic_product(x: float, kind: ProductKind) -> float:
    """Ai^4(x), Ai^3(x)Bi(x) or Ai^2(x)Bi^2(x).

    Beyond x = 30 the product is assembled from logarithms of the scaled
    factors so no intermediate overflows or underflows spuriously.
    """
    kind = ProductKind(kind)
    p, q = kind.powers
    if x > _LOG_SCALE_FROM:
        sign, logp = log_quartic_product(x, kind)
        return sign * math.exp(logp) if logp > -745.2 else 0.0
    ai, _, bi, _, zeta = airy_scaled(x)
    value = ai ** p * bi ** q
    if zeta:
        value *= math.exp((q - p) * zeta)
    return value
