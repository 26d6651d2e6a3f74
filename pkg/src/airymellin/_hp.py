"""Extended-precision (``decimal``) helpers.

Used where double precision is not enough: the Maclaurin series of the Airy
functions (cancellation for |x| up to 12), exact-coefficient closed forms
(cancellation between rational multiples of irrational constants) and the
recessive solution of the three-term recurrence.
"""
from __future__ import annotations

from decimal import Decimal, getcontext, localcontext
from fractions import Fraction

PREC = 60

# 70 significant digits each; trimmed by the working context.
PI = Decimal("3.141592653589793238462643383279502884197169399375105820974944592307816")
EULER_GAMMA = Decimal("0.5772156649015328606065120900824024310421593359399235988057672348848677")
AI0 = Decimal("0.35502805388781723926006318600418317639797917419917724058332651030081")
MINUS_AIP0 = Decimal("0.2588194037928067984051835601892039634790911383549345822100018138561028")


def dec(x) -> Decimal:
    """Convert int, float, Fraction or Decimal to Decimal in the current context."""
    if isinstance(x, Decimal):
        return +x
    if isinstance(x, Fraction):
        return Decimal(x.numerator) / Decimal(x.denominator)
    return +Decimal(x)


def kappa() -> Decimal:
    return MINUS_AIP0 / AI0


def sqrt3() -> Decimal:
    return Decimal(3).sqrt()


def ln(x) -> Decimal:
    return dec(x).ln()


def elliptic_KE(k2) -> tuple[Decimal, Decimal]:
    """K and E of squared modulus ``k2`` (0 <= k2 < 1) by the AGM."""
    k2 = dec(k2)
    eps = Decimal(10) ** (-(PREC - 5))
    a = Decimal(1)
    b = (1 - k2).sqrt()
    total = k2 / 2
    power = Decimal("0.5")
    while True:
        c = (a - b) / 2
        a, b = (a + b) / 2, (a * b).sqrt()
        power *= 2
        total += power * c * c
        if abs(c) < eps:
            break
    K = PI / (2 * a)
    return K, K * (1 - total)


def hyp2f1(a, b, c, z, prec: int = PREC) -> Decimal:
    """Gauss 2F1 power series in extended precision (|z| < 1, c off the poles)."""
    with localcontext() as ctx:
        ctx.prec = prec
        a, b, c, z = dec(a), dec(b), dec(c), dec(z)
        eps = Decimal(10) ** (-(prec - 3))
        term = Decimal(1)
        total = Decimal(1)
        k = 0
        small = 0
        while small < 3:
            term = term * (a + k) * (b + k) * z / ((c + k) * (k + 1))
            total += term
            k += 1
            if term == 0:
                break
            small = small + 1 if abs(term) <= eps * abs(total) else 0
            if k > 100000:
                raise ArithmeticError("extended-precision 2F1 did not converge")
        return +total


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_2, B_4, ..., B_{2*count} (Akiyama-Tanigawa)."""
    n_max = 2 * count
    a = [Fraction(0)] * (n_max + 1)
    out = {}
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out[m] = a[0]
    return [out[2 * k] for k in range(1, count + 1)]


_BERNOULLI = _bernoulli_even(40)


def sin(x) -> Decimal:
    x = dec(x)
    two_pi = 2 * PI
    x = x - two_pi * (x / two_pi).to_integral_value()
    term = x
    total = x
    x2 = x * x
    k = 1
    eps = Decimal(10) ** (-(getcontext().prec + 2))
    while abs(term) > eps:
        term = -term * x2 / ((2 * k) * (2 * k + 1))
        total += term
        k += 1
    return +total


def lgamma_positive(x) -> Decimal:
    """log Gamma(x) for x > 0 by upward shift and the Stirling series."""
    x = dec(x)
    if x <= 0:
        raise ValueError("lgamma_positive needs x > 0")
    shift = Decimal(1)
    while x < 45:
        shift *= x
        x += 1
    half_log_2pi = (2 * PI).ln() / 2
    result = (x - Decimal("0.5")) * x.ln() - x + half_log_2pi
    xpow = x
    x2 = x * x
    for k, b in enumerate(_BERNOULLI, start=1):
        result += dec(b) / (2 * k * (2 * k - 1) * xpow)
        xpow *= x2
    return result - shift.ln()


def gamma(x) -> Decimal:
    """Gamma in the working decimal precision; reflection below 1/2."""
    x = dec(x)
    if x >= Decimal("0.5"):
        return lgamma_positive(x).exp()
    s = sin(PI * x)
    if s == 0:
        raise ZeroDivisionError("gamma pole")
    return PI / (s * lgamma_positive(1 - x).exp())


def rgamma(x) -> Decimal:
    x = dec(x)
    if x <= 0 and x == x.to_integral_value():
        return Decimal(0)
    return 1 / gamma(x)
