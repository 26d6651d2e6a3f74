import math
from fractions import Fraction

import pytest

from airymellin.closed_form import Basis
from airymellin.errors import ConvergenceError, DomainError
from airymellin.mellin import (
    AlphaDecomposition,
    Family,
    Method,
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
    seq_y_representation,
    seq_z,
    seq_z_representation,
)
from airymellin.scalar_special import CONSTANTS, elliptic_E, elliptic_K

PI2 = math.pi ** 2
KAPPA = CONSTANTS.kappa

# Independent values: mpmath quad of the defining integrals (30 digits)
AI4_REF = {
    (1.0, 0.0): 0.004638029060494605,
    (2.0, 0.0): 0.0012127624643224783,
    (3.0, 0.0): 0.000583546569452394,
    (4.0, 0.0): 0.0003939550851302125,
    (2.5, 0.0): 0.000798086189857365,
    (5.5, 0.0): 0.000331327431023245,
    (1.0, 0.6): 0.00044006450639867,
    (2.5, 1.0): 7.338996391348e-6,
    (2.5, -1.0): 0.020593675333715,
    (0.4, 2.0): 1.5890226024085e-6,
    (0.7, 1.3): 0.000030593260700251449884,
}
AI3BI_REF = {
    (1.0, 0.0): 0.013262911924324611,
    (2.0, 0.0): 0.005422185763533604,
    (3.0, 0.0): 0.004009248010605165,
    (4.0, 0.0): 0.00414465997635144,
    (2.5, 0.0): 0.0044277580381235587,
    (5.5, 0.0): 0.00663416156318525,
    (0.7, 1.3): 0.00074601257542652010187,
}
# mpmath on [0, 40] plus the exact large-x tail through mpmath hyp2f1
AI2BI2_REF = {
    (0.5, 0.0): 0.13599169239925892702,
    (0.7, 1.3): 0.092573668133768784939,
    (0.4, -1.0): 0.11392845669072026962,
}


@pytest.mark.parametrize("key", sorted(AI4_REF))
def test_ai4_reference(key):
    r = mellin_ai4(*key)
    want = AI4_REF[key]
    # values at c = 2 lose about log10(sum|T|/|S|) digits; the estimate must cover that
    assert abs(r.value - want) <= max(1e-12 * abs(want), 2 * r.abs_error_estimate)
    assert r.method is Method.SERIES_C


@pytest.mark.parametrize("key", sorted(AI3BI_REF))
def test_ai3bi_reference(key):
    assert mellin_ai3bi(*key).value == pytest.approx(AI3BI_REF[key], rel=1e-12)


@pytest.mark.parametrize("key", sorted(AI2BI2_REF))
def test_ai2bi2_reference(key):
    assert mellin_ai2bi2(*key).value == pytest.approx(AI2BI2_REF[key], rel=1e-12)


def test_examples():
    assert mellin_ai4(1).value == pytest.approx(CONSTANTS.ln3 / (24 * PI2), rel=1e-14)
    assert mellin_ai4(4).value == pytest.approx((1.25 * CONSTANTS.ln3 - 1) / (96 * PI2), rel=1e-13)
    assert mellin_ai3bi(1).value == pytest.approx(1 / (24 * math.pi), rel=1e-14)
    assert mellin_ai3bi(2.5).value == pytest.approx(elliptic_E(math.sqrt(3) / 2) / (16 * PI2 * math.sqrt(3)), rel=1e-13)
    m0 = (6 * KAPPA ** 2 + 2 / KAPPA) / (64 * PI2 * math.sqrt(3))
    assert mellin_ai3bi(2).value == pytest.approx(m0, rel=1e-13)


def test_ai2bi2_pole_at_one():
    a = 1 - 1e-4
    reid = (4 * CONSTANTS.euler_gamma + 12 * CONSTANTS.ln2 - CONSTANTS.ln3) / (24 * PI2)
    assert abs(mellin_ai2bi2(a).value - 1 / (4 * PI2 * (1 - a)) - reid) < 1e-4


def test_domain_errors():
    with pytest.raises(DomainError):
        mellin_ai4(0.0)
    with pytest.raises(DomainError):
        mellin_ai3bi(-1.0)
    with pytest.raises(DomainError):
        mellin_ai2bi2(1.0)
    with pytest.raises(DomainError):
        mellin_ai4_integer(2.5)
    with pytest.raises(DomainError):
        mellin_integer("ai2bi2", 1)
    with pytest.raises(DomainError):
        SeriesConfig(tol=0)


def test_convergence_error_and_warning(caplog):
    with pytest.raises(ConvergenceError):
        mellin_ai4(1.0, 3.0, SeriesConfig(max_terms=5))
    r = mellin_ai4(1.0, 9.0)
    assert r.warnings and "c_max" in r.warnings[0]


def test_alpha_decomposition():
    d = AlphaDecomposition.from_alpha(3)
    assert (d.m, d.beta, d.b) == (0, 3, 5 / 3)
    d = AlphaDecomposition.from_alpha(8.5)
    assert d.m == 2 and d.beta == pytest.approx(2.5) and d.b == pytest.approx(1.5)
    d = AlphaDecomposition.from_alpha(0.2)
    assert d.m == 0 and 2 / 3 < d.b <= 5 / 3
    with pytest.raises(DomainError):
        AlphaDecomposition.from_alpha(0)


def test_integer_closed_forms_small():
    assert dict(mellin_ai4_integer(1).terms) == {Basis.LN3: Fraction(1, 24)}
    assert mellin_ai4_integer(1).pi_power == 2
    assert mellin_ai3bi_integer(1).terms == ((Basis.ONE, Fraction(1, 24)),)
    assert mellin_ai3bi_integer(4).terms == ((Basis.ONE, Fraction(5, 384)),)
    assert mellin_ai3bi_integer(4).pi_power == 1
    two = mellin_ai3bi_integer(2)
    assert two.sqrt3 == 1
    assert dict(two.terms) == {Basis.KAPPA_INV: Fraction(1, 96), Basis.KAPPA2: Fraction(1, 32)}


@pytest.mark.parametrize("alpha", range(1, 13))
def test_integer_forms_vs_series(alpha):
    assert float(mellin_ai4_integer(alpha)) == pytest.approx(mellin_ai4(alpha).value, rel=1e-11)
    assert float(mellin_ai3bi_integer(alpha)) == pytest.approx(mellin_ai3bi(alpha).value, rel=1e-11)


@pytest.mark.parametrize("m", range(6))
def test_halfinteger_vs_series(m):
    for kind in ("ai4", "ai3bi"):
        assert float(mellin_halfinteger(kind, m)) == pytest.approx(mellin(kind, 3 * m + 2.5).value, rel=1e-11)


def test_halfinteger_first_members():
    K, E = elliptic_K(0.5), elliptic_E(0.5)
    assert float(mellin_halfinteger("ai4", 0)) == pytest.approx((K - E) / (16 * PI2 * math.sqrt(3)), rel=1e-14)
    # y_1(5/2) = (8/(9 pi))(9K - 10E) times the m = 1 prefactor
    pref = math.factorial(10) / (2 ** 18 * 3 ** 2.5 * math.factorial(5) * math.pi)
    y1 = 8 / (9 * math.pi) * (9 * K - 10 * E)
    assert float(mellin_halfinteger("ai4", 1)) == pytest.approx(pref * y1, rel=1e-13)


def test_seq_PQ_displays():
    for b in (Fraction(1), Fraction(3, 2), Fraction(5, 3)):
        P2, Q2 = seq_PQ(2, b)
        assert P2 == -1 / (4 * (1 + b) ** 2)
        assert Q2 == 5 * (Fraction(1, 2) + b) / (4 * (1 + b) ** 2)
    assert seq_PQ(0, Fraction(1)) == (1, 0)
    assert seq_PQ(1, Fraction(1)) == (0, 1)
    # m = 3, b = 1 straight from the recurrence
    b = Fraction(1)
    P2, Q2 = seq_PQ(2, b)
    assert seq_PQ(3, b)[1] == (5 * (2 + b - Fraction(1, 2)) * Q2 - 1) / (4 * (2 + b) ** 2)
    assert seq_PQ(3, b)[1] == Fraction(5 ** 2, 4 ** 2 * 4 * 9) * Fraction(3, 2) * Fraction(5, 2) - Fraction(1, 4 * 9)


def test_seq_initial_values():
    K, E = elliptic_K(0.5), elliptic_E(0.5)
    assert seq_y(0, Fraction(5, 2)) == pytest.approx(16 / math.pi * (K - E), rel=1e-13)
    assert seq_y(1, Fraction(5, 2)) == pytest.approx(8 / (9 * math.pi) * (9 * K - 10 * E), rel=1e-13)
    Kp, Ep = elliptic_K(math.sqrt(3) / 2), elliptic_E(math.sqrt(3) / 2)
    assert seq_z(0, Fraction(5, 2)) == pytest.approx(2 / math.pi * Ep, rel=1e-13)
    assert seq_z(1, Fraction(5, 2)) == pytest.approx((10 * Ep - Kp) / (9 * math.pi), rel=1e-13)


@pytest.mark.parametrize("m", range(11))
def test_z_dual_route_beta_one(m):
    assert seq_z_representation(m, 1) == pytest.approx(seq_z(m, 1), rel=1e-11)
    assert seq_y_representation(m, 1) == pytest.approx(seq_y(m, 1), rel=1e-11)


def test_pq_examples():
    assert pq_extract(Family.F1, 0) == (Fraction(1, 24), 0)
    assert pq_extract(Family.F2, 0) == (Fraction(1, 48), Fraction(1, 32))
    assert pq_extract(Family.F3, 0) == (Fraction(7, 256), Fraction(3, 128))


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("m", range(7))
def test_pq_cross(family, m):
    p, q = pq_extract(family, m)
    alpha = 3 * m + {Family.F1: 1, Family.F2: 2, Family.F3: 3}[family]
    assert ai3bi_from_pq(family, p, q) == mellin_ai3bi_integer(alpha)


def test_positivity_and_monotonicity():
    for alpha in (0.4, 1.0, 2.5, 4.2):
        vals = [mellin_ai4(alpha, c).value for c in (0.0, 0.5, 1.0, 2.0)]
        assert all(v > 0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert all(mellin_ai3bi(alpha, c).value > 0 for c in (0.0, 0.5, 1.0, 2.0))
