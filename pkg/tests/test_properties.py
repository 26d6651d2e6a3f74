"""Property-based checks of the invariants that hold for every admissible input."""
import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from airymellin.airy import airy_eval
from airymellin.cli import OutputRecord
from airymellin.closed_form import Basis, ClosedForm
from airymellin.hyp import eval_2f1_threequarters_via_quarter, gauss_2f1, terminating_2f1
from airymellin.mellin import AlphaDecomposition, mellin_ai3bi, mellin_ai4, seq_PQ
from airymellin.scalar_special import gamma, pochhammer_rational, rgamma

finite = dict(allow_nan=False, allow_infinity=False)


@given(st.floats(0.1, 30.0))
def test_gamma_recurrence(x):
    assert abs(gamma(x + 1) - x * gamma(x)) <= 1e-13 * abs(x * gamma(x))


@given(st.floats(-20.0, 20.0))
def test_rgamma_times_gamma(x):
    if abs(x - round(x)) > 1e-6 or x > 0.5:
        assert abs(rgamma(x) * gamma(x) - 1.0) < 1e-12


@given(st.floats(-200.0, 100.0))
def test_wronskian_everywhere(x):
    v = airy_eval(x)
    assert abs(v.wronskian * math.pi - 1.0) < 1e-11


@given(st.floats(-3.0, 3.0).filter(lambda a: abs(a - 0.5 - round(a - 0.5)) > 1e-3))
def test_threequarters_route(a):
    direct = gauss_2f1(a, 0.5, 1.0, 0.75)
    assert abs(eval_2f1_threequarters_via_quarter(a) - direct) <= 1e-10 * abs(direct)


@given(st.integers(0, 25), st.fractions(Fraction(-3), Fraction(3), max_denominator=12))
def test_terminating_matches_float(m, b):
    exact = terminating_2f1(m, b, 1, Fraction(1, 4))
    assert abs(float(exact) - gauss_2f1(-m, float(b), 1.0, 0.25)) <= 1e-12 * max(1.0, abs(float(exact)))


@given(st.fractions(Fraction(1, 10), Fraction(10), max_denominator=30), st.integers(0, 30))
def test_recurrence_exact(b, m):
    P0, Q0 = seq_PQ(m, b)
    P1, Q1 = seq_PQ(m + 1, b)
    P2, Q2 = seq_PQ(m + 2, b)
    k = m + 1
    for f0, f1, f2 in ((P0, P1, P2), (Q0, Q1, Q2)):
        assert 4 * (k + b) ** 2 * f2 - 5 * (k + b - Fraction(1, 2)) * f1 + f0 == 0


@given(st.floats(1e-3, 100.0, **finite))
def test_alpha_decomposition(alpha):
    d = AlphaDecomposition.from_alpha(alpha)
    assert abs(3 * d.m + d.beta - alpha) <= 1e-12 * alpha
    assert 0 < d.beta <= 3 and 2 / 3 < d.b <= 5 / 3 + 1e-15


@settings(deadline=None, max_examples=40)
@given(st.floats(0.2, 5.0), st.floats(0.0, 2.0))
def test_moments_positive_and_ordered(alpha, c):
    a4 = mellin_ai4(alpha, c).value
    a3 = mellin_ai3bi(alpha, c).value
    # Bi >= Ai on [0, inf), so the Ai^3 Bi moment dominates
    assert 0 < a4 < a3


@settings(deadline=None, max_examples=30)
@given(st.floats(0.2, 4.0), st.floats(0.0, 1.5), st.floats(0.05, 1.0))
def test_monotone_in_c(alpha, c, dc):
    assert mellin_ai4(alpha, c + dc).value < mellin_ai4(alpha, c).value


@given(st.dictionaries(st.sampled_from(list(Basis)), st.fractions(max_denominator=1000), max_size=4),
       st.integers(0, 3), st.integers(0, 1))
def test_closed_form_linear(coeffs, pi_power, sqrt3):
    cf = ClosedForm.build(coeffs, pi_power, sqrt3)
    doubled = ClosedForm.build({b: 2 * c for b, c in coeffs.items()}, pi_power, sqrt3)
    assert abs(2 * cf.evaluate() - doubled.evaluate()) <= 1e-14 * max(1.0, abs(doubled.evaluate()))
    assert isinstance(cf.render(), str)


@given(st.builds(OutputRecord, st.sampled_from(["ai4", "ai3bi", "ai2bi2"]), st.floats(**finite),
                 st.floats(**finite), st.floats(**finite), st.floats(0, 1, **finite), st.text(max_size=12),
                 st.none() | st.text(max_size=20), st.none() | st.floats(**finite), st.none() | st.floats(**finite)))
def test_record_roundtrip(rec):
    assert OutputRecord.from_json(rec.to_json()) == rec


@given(st.fractions(Fraction(-5), Fraction(5), max_denominator=9), st.integers(0, 12))
def test_pochhammer_shift(x, n):
    assert pochhammer_rational(x, n + 1) == pochhammer_rational(x, n) * (x + n)
