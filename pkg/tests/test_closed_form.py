import math
from fractions import Fraction

import pytest

from airymellin.closed_form import Basis, ClosedForm
from airymellin.scalar_special import CONSTANTS, elliptic_E, elliptic_K


def test_build_drops_zeros_and_orders():
    cf = ClosedForm.build({Basis.ONE: Fraction(-1, 96), Basis.LN3: Fraction(5, 384), Basis.LN2: 0}, pi_power=2)
    assert [b for b, _ in cf.terms] == [Basis.LN3, Basis.ONE]
    assert cf.coefficient(Basis.LN2) == 0


def test_evaluate_matches_float_arithmetic():
    k = CONSTANTS.kappa
    cf = ClosedForm.build({Basis.KAPPA_INV: Fraction(1, 48), Basis.KAPPA2: Fraction(-1, 32)}, pi_power=2)
    assert float(cf) == pytest.approx((2 / 3 - k ** 3) / (32 * math.pi ** 2 * k), rel=1e-14)
    ell = ClosedForm.build({Basis.K_HALF: Fraction(1, 48), Basis.E_ROOT3_HALF: Fraction(1, 7)}, pi_power=1, sqrt3=1)
    want = math.sqrt(3) * (elliptic_K(0.5) / 48 + elliptic_E(math.sqrt(3) / 2) / 7) / math.pi
    assert ell.evaluate() == pytest.approx(want, rel=1e-14)


def test_evaluate_survives_cancellation():
    # 1 - 3*(1/3) computed through the constants: exactly zero rational part
    cf = ClosedForm.build({Basis.GAMMA_EULER: 1, Basis.ONE: Fraction(-57721566490153286, 10 ** 17)})
    assert abs(cf.evaluate()) < 1e-17


@pytest.mark.parametrize("coeffs,pi_power,sqrt3,text", [
    ({Basis.LN3: Fraction(1, 24)}, 2, 0, "ln3/(24π²)"),
    ({Basis.LN3: Fraction(5, 384), Basis.ONE: Fraction(-1, 96)}, 2, 0, "((5/4)ln3 − 1)/(96π²)"),
    ({Basis.KAPPA_INV: Fraction(1, 48), Basis.KAPPA2: Fraction(-1, 32)}, 2, 0, "(2/3 − κ³)/(32π²κ)"),
    ({Basis.KAPPA_INV2: Fraction(7, 768), Basis.KAPPA: Fraction(-1, 64)}, 2, 0, "(7/12 − κ³)/(64π²κ²)"),
    ({Basis.ONE: Fraction(1, 24)}, 1, 0, "1/(24π)"),
    ({Basis.K_HALF: Fraction(1, 48), Basis.E_HALF: Fraction(-1, 48)}, 2, 1, "√3·(K(1/2) − E(1/2))/(48π²)"),
])
def test_render(coeffs, pi_power, sqrt3, text):
    assert ClosedForm.build(coeffs, pi_power, sqrt3).render() == text


def test_exact_repr():
    cf = ClosedForm.build({Basis.LN3: Fraction(5, 384), Basis.ONE: Fraction(-1, 96)}, pi_power=2)
    assert cf.exact_repr() == "(5/384*ln3 - 1/96)/pi^2"
    assert ClosedForm.build({}).render() == "0"


def test_sqrt3_flag_validated():
    with pytest.raises(ValueError):
        ClosedForm.build({Basis.ONE: 1}, sqrt3=2)
