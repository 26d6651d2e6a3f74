import math
import random
from fractions import Fraction

import pytest

from airymellin.errors import DomainError, PoleError
from airymellin.scalar_special import (
    CONSTANTS,
    Rational,
    elliptic_E,
    elliptic_K,
    gamma,
    pochhammer,
    pochhammer_rational,
    rgamma,
    sinpi,
)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_rational_is_canonical():
    r = Rational(6, -4)
    assert (r.numerator, r.denominator) == (-3, 2)
    assert Rational(0, 7) == Rational(0, 1) and Rational(0, 7).denominator == 1


def test_gamma_simple_values():
    assert gamma(1.0) == 1.0
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-15
    assert rel(3 ** (1 / 3) * gamma(2 / 3) / gamma(1 / 3), 0.7290) < 2e-5


def test_gamma_reference_values():
    # mpmath, 30 digits
    assert rel(gamma(-2.5), -0.94530872048294188123) < 1e-14
    assert rel(gamma(37.3), 1.0958750014758805089e42) < 1e-14
    assert rel(rgamma(-3.7), 3.9738679097583531282) < 1e-14


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0, -3.0 + 1e-13])
def test_gamma_pole(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_rgamma_zeros_and_continuity():
    for n in range(0, 8):
        assert rgamma(-float(n)) == 0.0
        left, right = rgamma(-n - 1e-9), rgamma(-n + 1e-9)
        assert abs(left) < 1e-7 * math.factorial(n) + 1e-7 and abs(right) < 1e-7 * math.factorial(n) + 1e-7
    assert rgamma(1.0) == 1.0
    assert rgamma(170.5) > 0.0
    assert rgamma(250.0) == 0.0  # underflows, 1/Gamma(250) < 1e-490


def test_gamma_recurrence_and_reflection():
    rng = random.Random(0)
    for _ in range(200):
        x = rng.uniform(0.1, 30)
        assert rel(gamma(x + 1), x * gamma(x)) < 1e-13
        y = rng.uniform(0.01, 0.99)
        assert rel(gamma(y) * gamma(1 - y), math.pi / math.sin(math.pi * y)) < 1e-13


def test_sinpi_exact_zeros():
    assert sinpi(3.0) == 0.0 and sinpi(-2.0) == 0.0
    assert sinpi(0.5) == 1.0


def test_pochhammer():
    assert pochhammer(5, 0) == 1
    assert pochhammer(1.5, 2) == 3.75
    assert pochhammer_rational(Fraction(1, 6), 2) == Fraction(7, 36)
    assert pochhammer_rational(Fraction(1, 3), 3) == Fraction(28, 27)
    assert pochhammer_rational(-2, 3) == 0
    assert pochhammer_rational(1, 6) == math.factorial(6)
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


def test_elliptic_values():
    assert elliptic_K(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert elliptic_E(1.0) == 1.0
    # mpmath ellipk/ellipe at parameter m = k^2
    assert rel(elliptic_K(0.5), 1.6857503548125960429) < 1e-14
    assert rel(elliptic_E(0.5), 1.4674622093394271555) < 1e-14
    assert rel(elliptic_K(math.sqrt(3) / 2), 2.1565156474996432354) < 1e-14
    assert rel(elliptic_E(math.sqrt(3) / 2), 1.2110560275684595248) < 1e-14


@pytest.mark.parametrize("k", [i / 10 for i in range(1, 10)])
def test_legendre_relation(k):
    kp = math.sqrt(1 - k * k)
    lhs = elliptic_E(k) * elliptic_K(kp) + elliptic_E(kp) * elliptic_K(k) - elliptic_K(k) * elliptic_K(kp)
    assert rel(lhs, math.pi / 2) < 1e-12


def test_elliptic_domain():
    with pytest.raises(DomainError):
        elliptic_K(1.0)
    with pytest.raises(DomainError):
        elliptic_E(1.5)


def test_constants():
    assert 0.72 < CONSTANTS.kappa < 0.73
    assert rel(CONSTANTS.kappa, 3 ** (1 / 3) * gamma(2 / 3) / gamma(1 / 3)) < 1e-15
    assert CONSTANTS.ln3 == math.log(3)
