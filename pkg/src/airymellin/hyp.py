"""Gauss hypergeometric function and the terminating sums built from it.

Everything here lives at the small set of arguments the Airy moment
formulas need: z = 1/4 and z = 3/4 for nonterminating series, z = 1 (and
rational z) for terminating ones.  Terminating sums take rational
arguments and return exact ``Fraction`` values.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb, factorial
from numbers import Rational as _RationalABC

from . import _hp
from .errors import ConvergenceError, DegenerateParameterError, DomainError, PoleError
from .scalar_special import gamma, pochhammer, rgamma

__all__ = [
    "HypParams",
    "VidunasInput",
    "Identity",
    "gauss_2f1",
    "gauss_2f1_regularized",
    "eval_2f1_threequarters_via_quarter",
    "terminating_2f1",
    "terminating_pfq",
    "terminating_4f3",
    "vidunas_K",
    "vidunas_L",
    "vidunas_2f1",
    "rel9_2f1",
    "identity_sides",
    "identity_residual",
]

MAX_TERMS = 100000
_EXACT_DEGREE = 64
_STOP_TOL = 1e-16
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class HypParams:
    a: float
    b: float
    c: float
    z: float


@dataclass(frozen=True)
class VidunasInput:
    a: float
    n: int


def _nonpositive_integer(x) -> int | None:
    """Return M if x == -M for an integer M >= 0, else None."""
    if x <= 0 and x == math.floor(x):
        return int(-x)
    return None


def _termination_degree(*params) -> int | None:
    degrees = [d for d in map(_nonpositive_integer, params) if d is not None]
    return min(degrees) if degrees else None


def gauss_2f1(a, b: float = None, c: float = None, z: float = None, *, max_terms: int = MAX_TERMS) -> float:
    """2F1(a, b; c | z) by its power series; ``a`` may also be a HypParams.

    Terms follow t[k+1] = t[k] (a+k)(b+k) z / ((c+k)(k+1)); summation stops
    after three consecutive terms below 1e-16 of the partial sum.  Short
    terminating series are summed exactly in rationals (a float is an exact
    rational), since their alternating terms cancel badly in floating point.
    """
    if isinstance(a, HypParams):
        a, b, c, z = a.a, a.b, a.c, a.z
    if z == 0:
        return 1.0
    degree = _termination_degree(a, b)
    pole = _nonpositive_integer(c)
    if pole is not None and (degree is None or degree > pole):
        raise PoleError(f"2F1 denominator parameter c={c} is a pole")
    if degree is None and abs(z) >= 1.0:
        raise DomainError(f"2F1 power series needs |z| < 1, got z={z}")
    if degree is not None and degree <= _EXACT_DEGREE:
        return float(terminating_pfq([Fraction(a), Fraction(b)], [Fraction(c)], Fraction(z)))
    terms = [1.0]
    term = 1.0
    total = 1.0
    small = 0
    for k in range(max_terms):
        if degree is not None and k >= degree:
            return math.fsum(terms)
        term *= (a + k) * (b + k) * z / ((c + k) * (k + 1))
        terms.append(term)
        total += term
        if abs(term) <= _STOP_TOL * abs(total):
            small += 1
            if small >= 3:
                return math.fsum(terms)
        else:
            small = 0
    raise ConvergenceError(f"2F1({a}, {b}; {c} | {z}) not converged in {max_terms} terms")


def gauss_2f1_regularized(a: float, b: float, c: float, z: float, *, max_terms: int = MAX_TERMS) -> float:
    """2F1(a, b; c | z) / Gamma(c), entire in c.

    Summed as sum_k (a)_k (b)_k z^k / (k! Gamma(c+k)); at c = -N the first
    N+1 terms vanish and the limit value comes out of the remaining ones.
    """
    degree = _termination_degree(a, b)
    if degree is None and abs(z) >= 1.0:
        raise DomainError(f"2F1 power series needs |z| < 1, got z={z}")
    u = 1.0
    rg = rgamma(c)
    terms = []
    total = 0.0
    small = 0
    for k in range(max_terms):
        t = u * rg
        terms.append(t)
        total += t
        if degree is not None and k >= degree:
            return math.fsum(terms)
        if c + k > 0:
            if abs(t) <= _STOP_TOL * abs(total):
                small += 1
                if small >= 3:
                    return math.fsum(terms)
            else:
                small = 0
        u *= (a + k) * (b + k) * z / (k + 1)
        ck = c + k
        rg = rgamma(ck + 1.0) if ck < 1.0 else rg / ck
    raise ConvergenceError(f"regularized 2F1({a}, {b}; {c} | {z}) not converged")


def eval_2f1_threequarters_via_quarter(a: float, *, strict: bool = False) -> float:
    """2F1(a, 1/2; 1 | 3/4) through the two-term connection to z = 1/4.

    2F1(a,1/2;1|3/4) = G(1/2-a)/(sqrt(pi) G(1-a)) 2F1(a,1/2;a+1/2|1/4)
                     + 2^(2a-1) G(a-1/2)/(sqrt(pi) G(a)) 2F1(1-a,1/2;3/2-a|1/4)

    When a - 1/2 is (within 1e-3 of) an integer both terms are singular; the
    direct series at z = 3/4 is used instead, or
    :class:`DegenerateParameterError` is raised if ``strict``.
    """
    d = a - 0.5
    if abs(d - round(d)) < 1e-3:
        if strict:
            raise DegenerateParameterError(f"a - 1/2 is an integer (a={a})")
        return gauss_2f1(a, 0.5, 1.0, 0.75)
    t1 = gamma(0.5 - a) * rgamma(1.0 - a) / _SQRT_PI
    if t1:
        t1 *= gauss_2f1(a, 0.5, a + 0.5, 0.25)
    t2 = 2.0 ** (2.0 * a - 1.0) * gamma(a - 0.5) * rgamma(a) / _SQRT_PI
    if t2:
        t2 *= gauss_2f1(1.0 - a, 0.5, 1.5 - a, 0.25)
    return t1 + t2


def terminating_pfq(num, den, z=1) -> Fraction:
    """Exact value of a terminating pFq with rational parameters.

    At least one numerator parameter must be a nonpositive integer; the sum
    stops at the smallest such degree.
    """
    num = [Fraction(p) for p in num]
    den = [Fraction(q) for q in den]
    z = Fraction(z)
    degree = _termination_degree(*num)
    if degree is None:
        raise DomainError("terminating_pfq needs a nonpositive-integer numerator parameter")
    for q in den:
        pole = _nonpositive_integer(q)
        if pole is not None and pole < degree:
            raise PoleError(f"denominator parameter {q} hits zero before termination")
    total = Fraction(1)
    term = Fraction(1)
    for k in range(degree):
        for p in num:
            term *= p + k
        for q in den:
            term /= q + k
        term *= z / (k + 1)
        total += term
    return total


def terminating_4f3(num, den) -> Fraction:
    """4F3(num; den | 1) for four numerator and three denominator parameters."""
    if len(num) != 4 or len(den) != 3:
        raise DomainError("terminating_4f3 takes 4 numerator and 3 denominator parameters")
    return terminating_pfq(num, den, 1)


def terminating_2f1(m: int, b, c, z) -> Fraction:
    """Exact 2F1(-m, b; c | z) for integer m >= 0 and rational b, c, z."""
    if m < 0:
        raise DomainError("terminating_2f1 needs m >= 0")
    return terminating_pfq([-m, b], [c], z)


def _half(a):
    return Fraction(1, 2) if isinstance(a, _RationalABC) else 0.5


def _const(num: int, den: int, like):
    return Fraction(num, den) if isinstance(like, _RationalABC) else num / den


def _ratio_poch(top, bottom, k: int):
    d = pochhammer(bottom, k)
    if d == 0:
        raise DomainError("vanishing Pochhammer denominator in Vidunas sum")
    p = pochhammer(top, k)
    if isinstance(p, _RationalABC) and isinstance(d, _RationalABC):
        return Fraction(p, d)
    return p / d


def _vidunas_long(n: int, top, bottom) -> object:
    # (-1)^n n/3 sum_{ceil(n/3) <= k <= floor(n/2)} (k-1)!/((n-2k)!(3k-n)!) (top)_k/(bottom)_k (27/4)^k
    ratio = _const(27, 4, top)
    total = 0
    for k in range(-(-n // 3), n // 2 + 1):
        w = Fraction(factorial(k - 1), factorial(n - 2 * k) * factorial(3 * k - n))
        total += w * _ratio_poch(top, bottom, k) * ratio ** k
    return (-1) ** n * _const(n, 3, top) * total


def _vidunas_short(n: int, top, bottom) -> object:
    # n/3 sum_{0 <= k <= floor(n/3)} (n-2k-1)!/((n-3k)! k!) (top)_k/(bottom)_k (-4/27)^k
    ratio = _const(-4, 27, top)
    total = 0
    for k in range(n // 3 + 1):
        w = Fraction(factorial(n - 2 * k - 1), factorial(n - 3 * k) * factorial(k))
        total += w * _ratio_poch(top, bottom, k) * ratio ** k
    return _const(n, 3, top) * total


def vidunas_K(a, n: int):
    """The terminating sum K(a, n); exact when ``a`` is rational."""
    if isinstance(a, VidunasInput):
        a, n = a.a, a.n
    h = _half(a)
    if n == 0:
        return 1
    if n == 1:
        return 0
    if n >= 2:
        return _vidunas_long(n, a + h, a + 1)
    return _vidunas_short(-n, -a, -a + h)


def vidunas_L(a, n: int):
    """The terminating sum L(a, n); exact when ``a`` is rational."""
    if isinstance(a, VidunasInput):
        a, n = a.a, a.n
    h = _half(a)
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n >= 2:
        return _vidunas_short(n - 1, a + 1, a + 3 * h)
    return _vidunas_long(1 - n, -a - h, -a)


def vidunas_2f1(a: float, n: int) -> float:
    """2F1(-a, 1/2; n + 2a + 3/2 | 1/4) from the K and L sums.

    The two gamma-weighted terms cancel heavily as |n| grows, so they are
    combined in 60-digit arithmetic with K, L summed exactly.
    """
    a_exact = Fraction(a)
    K = vidunas_K(a_exact, n)
    L = vidunas_L(a_exact, n)
    with localcontext() as ctx:
        ctx.prec = _hp.PREC
        A = _hp.dec(a_exact)
        c = n + 2 * A + Decimal("1.5")
        for arg in (A + Decimal("0.5"), c, A + 1):
            if arg <= 0 and arg == arg.to_integral_value():
                raise PoleError(f"gamma pole at {arg} in Vidunas prefactor")
        g_c = _hp.gamma(c)
        first = Decimal(0)
        if K:
            first = ((Decimal(27) / 4).ln() * A).exp() * _hp.gamma(A + Decimal("0.5")) * g_c \
                * _hp.rgamma(n + 3 * A + Decimal("1.5")) / _hp.PI.sqrt() * _hp.dec(K)
        second = Decimal(0)
        if L:
            second = ((-1) ** (n - 1) * 2 * Decimal(3) ** (n - 2) * _hp.gamma(A + 1) * g_c
                      * _hp.rgamma(A + Decimal("1.5")) * _hp.rgamma(n + 2 * A + 1) * _hp.dec(L))
        return float(first + second)


def rel9_2f1(m: int, a: float) -> float:
    """2F1(m+1, 1/2; m+3/2 | a^2) as a logarithm plus a finite double sum.

    The bracket is O(a^(2m)) while its pieces are O(1), so it is evaluated
    in extended precision.
    """
    if m < 0:
        raise DomainError("rel9_2f1 needs m >= 0")
    if not 0.0 < a < 1.0:
        raise DomainError(f"rel9_2f1 needs 0 < a < 1, got {a!r}")
    prec = _hp.PREC + 3 * m
    with localcontext() as ctx:
        ctx.prec = prec
        A = _hp.dec(a)
        A2 = A * A
        one = 1 - A2
        log_part = ((1 + A) / (1 - A)).ln() / (2 * A)
        # 2F1(-m, 1/2; 1 | 1 - a^2)
        poly = sum(
            _hp.dec(Fraction((-1) ** k * comb(m, k) * comb(2 * k, k), 4 ** k)) * one ** k
            for k in range(m + 1)
        )
        inner = 0
        for k in range(1, m + 1):
            s = sum(_hp.dec(Fraction(1, 2 * j * comb(2 * j, j))) * (one / 4) ** (k - j) for j in range(1, k + 1))
            inner += (-1) ** k * comb(m, k) * comb(2 * k, k) * s
        bracket = poly * log_part + inner
        pref = _hp.dec(Fraction(pochhammer(Fraction(3, 2), m), factorial(m))) / A2 ** m
        return float(pref * bracket)


class Identity(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"


def identity_sides(identity: Identity, a: float) -> tuple[float, float]:
    """(series side, gamma side) of one of three 2F1 evaluations.

    A: 2F1(a, 1/2; 3a | 3/4)         = 2^(2a+1) sqrt(pi) G(3a) / (3^(3a) G(a+1/2) G(2a))
    B: 2F1(a+1/3, 1/2; 3a | 3/4)     = 2 G(a+5/6) G(3a) / (G(a+1/3) G(3a+1/2))
    C: 2F1(3a-5/4, 3/4-a; 2a | 1/4)  = 2^(4a-1) sqrt(pi) G(2a) / (3^(3a-3/4) G(2/3) G(2a-1/6))
    """
    identity = Identity(identity)
    if identity is Identity.A:
        lhs = gauss_2f1(a, 0.5, 3 * a, 0.75)
        rhs = (2.0 ** (2 * a + 1) * _SQRT_PI * gamma(3 * a) * 3.0 ** (-3 * a)
               * rgamma(a + 0.5) * rgamma(2 * a))
    elif identity is Identity.B:
        lhs = gauss_2f1(a + 1.0 / 3.0, 0.5, 3 * a, 0.75)
        rhs = 2.0 * gamma(a + 5.0 / 6.0) * gamma(3 * a) * rgamma(a + 1.0 / 3.0) * rgamma(3 * a + 0.5)
    else:
        lhs = gauss_2f1(3 * a - 1.25, 0.75 - a, 2 * a, 0.25)
        rhs = (2.0 ** (4 * a - 1) * _SQRT_PI * gamma(2 * a) * 3.0 ** (0.75 - 3 * a)
               / gamma(2.0 / 3.0) * rgamma(2 * a - 1.0 / 6.0))
    return lhs, rhs


def identity_residual(identity: Identity, a: float) -> float:
    """|series side - gamma side| / |gamma side|."""
    lhs, rhs = identity_sides(identity, a)
    return abs(lhs - rhs) / abs(rhs)
