"""Scalar special-function kernels.

Gamma and reciprocal gamma on the real line, rising factorials (float and
exact), complete elliptic integrals in the modulus convention, and the
named constants that appear in the closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DomainError, PoleError

__all__ = [
    "Rational",
    "Constants",
    "CONSTANTS",
    "sinpi",
    "gamma",
    "rgamma",
    "pochhammer",
    "pochhammer_rational",
    "agm",
    "elliptic_K",
    "elliptic_E",
]

# Exact rationals are plain ``fractions.Fraction`` objects: always reduced,
# positive denominator, 0 is 0/1.
Rational = Fraction

_POLE_TOL = 1e-12


@dataclass(frozen=True)
class Constants:
    euler_gamma: float
    kappa: float
    ln3: float
    ln2: float
    pi: float


CONSTANTS = Constants(
    euler_gamma=0.5772156649015328606065120900824024310421593359399,
    # 3**(1/3) * Gamma(2/3) / Gamma(1/3) == -Ai'(0)/Ai(0)
    kappa=0.7290111329472269814186362647039359759727699690041,
    ln3=math.log(3.0),
    ln2=math.log(2.0),
    pi=math.pi,
)


def sinpi(x: float) -> float:
    """sin(pi*x) with exact zeros at the integers."""
    if x == math.floor(x):
        return 0.0
    r = math.fmod(x, 2.0)
    if r < 0.0:
        r += 2.0
    if r > 1.0:
        return -sinpi(r - 1.0)
    if r > 0.5:
        r = 1.0 - r
    return math.sin(math.pi * r)


def _near_nonpositive_integer(x: float, tol: float = _POLE_TOL) -> bool:
    return x <= tol and abs(x - round(x)) <= tol


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    ``math.gamma`` is used for x >= 1/2 and the reflection formula below
    that.  Raises :class:`PoleError` within 1e-12 of a nonpositive integer.
    """
    x = float(x)
    if _near_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    if x >= 0.5:
        return math.gamma(x)
    return math.pi / (sinpi(x) * math.gamma(1.0 - x))


def rgamma(x: float) -> float:
    """Reciprocal gamma 1/Gamma(x), entire; exactly 0 at 0, -1, -2, ..."""
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    if x >= 0.5:
        if x > 171.0:
            return math.exp(-math.lgamma(x))
        return 1.0 / math.gamma(x)
    s = sinpi(x)
    if 1.0 - x > 171.0:
        return math.copysign(math.exp(math.lgamma(1.0 - x) + math.log(abs(s))), s) / math.pi
    return s * math.gamma(1.0 - x) / math.pi


def pochhammer(x, n: int):
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.

    Works for any numeric type; the float result of a float argument.
    """
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    result = 1 if isinstance(x, (int, _RationalABC)) else 1.0
    for k in range(n):
        result *= x + k
    return result


def pochhammer_rational(x, n: int) -> Fraction:
    """Exact rising factorial of a rational argument."""
    return Fraction(pochhammer(Fraction(x), n))


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two nonnegative numbers."""
    if a < 0 or b < 0:
        raise DomainError("agm needs nonnegative arguments")
    for _ in range(64):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus ``k`` in [0, 1)."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"elliptic_K needs 0 <= k < 1, got {k!r}")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kp))


def elliptic_E(k: float) -> float:
    """Complete elliptic integral of the second kind, modulus ``k`` in [0, 1].

    Uses the AGM together with the sum of the squared half-differences.
    """
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"elliptic_E needs 0 <= k <= 1, got {k!r}")
    if k == 1.0:
        return 1.0
    a = 1.0
    b = math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    total = 0.5 * c * c
    power = 0.5
    for _ in range(64):
        if abs(c) <= 1e-17:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        power *= 2.0
        total += power * c * c
    return math.pi / (2.0 * a) * (1.0 - total)
