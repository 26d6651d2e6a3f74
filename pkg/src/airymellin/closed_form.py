"""Exact closed forms: rational combinations of a few named constants.

A :class:`ClosedForm` is ``sqrt(3)**s / pi**p * sum(coeff * constant)``
with ``Fraction`` coefficients.  Values are rendered in 60-digit decimal
arithmetic before rounding to float, because the rational parts of the
integer-order moments can cancel against each other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Mapping

from . import _hp

__all__ = ["Basis", "ClosedForm"]


class Basis(str, enum.Enum):
    LN3 = "ln3"
    LN2 = "ln2"
    GAMMA_EULER = "γ"
    K_HALF = "K(1/2)"
    E_HALF = "E(1/2)"
    K_ROOT3_HALF = "K(√3/2)"
    E_ROOT3_HALF = "E(√3/2)"
    KAPPA_INV2 = "κ⁻²"
    KAPPA_INV = "κ⁻¹"
    KAPPA = "κ"
    KAPPA2 = "κ²"
    ONE = "1"

    @property
    def kappa_power(self) -> int:
        return _KAPPA_POWER.get(self, 0)


_KAPPA_POWER = {Basis.KAPPA_INV2: -2, Basis.KAPPA_INV: -1, Basis.KAPPA: 1, Basis.KAPPA2: 2}
_ORDER = {b: i for i, b in enumerate(Basis)}
_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _basis_value(basis: Basis) -> Decimal:
    if basis is Basis.ONE:
        return Decimal(1)
    if basis is Basis.LN3:
        return _hp.ln(3)
    if basis is Basis.LN2:
        return _hp.ln(2)
    if basis is Basis.GAMMA_EULER:
        return +_hp.EULER_GAMMA
    if basis in (Basis.K_HALF, Basis.E_HALF):
        K, E = _hp.elliptic_KE(Fraction(1, 4))
        return K if basis is Basis.K_HALF else E
    if basis in (Basis.K_ROOT3_HALF, Basis.E_ROOT3_HALF):
        K, E = _hp.elliptic_KE(Fraction(3, 4))
        return K if basis is Basis.K_ROOT3_HALF else E
    return _hp.kappa() ** basis.kappa_power


def _power(symbol: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return symbol
    return symbol + str(n).translate(_SUPERSCRIPT)


@dataclass(frozen=True)
class ClosedForm:
    """sqrt(3)**sqrt3 / pi**pi_power * sum(coeff * basis constant)."""

    terms: tuple[tuple[Basis, Fraction], ...]
    pi_power: int = 0
    sqrt3: int = 0

    @classmethod
    def build(cls, coeffs: Mapping[Basis, Fraction], pi_power: int = 0, sqrt3: int = 0) -> "ClosedForm":
        if sqrt3 not in (0, 1):
            raise ValueError("sqrt3 flag must be 0 or 1")
        items = sorted(
            ((Basis(b), Fraction(c)) for b, c in coeffs.items() if c != 0),
            key=lambda bc: _ORDER[bc[0]],
        )
        return cls(tuple(items), int(pi_power), int(sqrt3))

    def coefficient(self, basis: Basis) -> Fraction:
        for b, c in self.terms:
            if b is basis:
                return c
        return Fraction(0)

    def to_decimal(self, prec: int = _hp.PREC) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec
            total = sum((_hp.dec(c) * _basis_value(b) for b, c in self.terms), Decimal(0))
            if self.sqrt3:
                total *= _hp.sqrt3()
            return total / _hp.PI ** self.pi_power

    def evaluate(self) -> float:
        return float(self.to_decimal())

    __float__ = evaluate

    def render(self) -> str:
        """Human-readable form with the common rational factored out.

        e.g. ``(2/3 - κ³)/(32π²κ)``; coefficients appear as ``num/den``.
        """
        if not self.terms:
            return "0"
        scale = abs(self.terms[-1][1])
        kmin = min(0, min(b.kappa_power for b, _ in self.terms))
        pieces = []
        for b, c in self.terms:
            k = b.kappa_power
            symbol = _power("κ", k - kmin) if k else b.value
            if b is Basis.ONE:
                symbol = ""
            coeff = c / scale
            mag = abs(coeff)
            if not symbol:
                text = str(mag)
            elif mag == 1:
                text = symbol
            else:
                text = f"({mag}){symbol}" if mag.denominator != 1 else f"{mag}{symbol}"
            pieces.append(("−" if coeff < 0 else "+", text))
        inner = ("-" if pieces[0][0] == "−" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            inner += f" {sign} {text}"
        if len(pieces) > 1:
            inner = f"({inner})"
        if self.sqrt3:
            inner = f"√3·{inner}"
        if scale.numerator != 1:
            inner = f"{scale.numerator}·{inner}"
        den = ""
        if scale.denominator != 1:
            den += str(scale.denominator)
        den += _power("π", self.pi_power)
        den += _power("κ", -kmin)
        return f"{inner}/({den})" if den else inner

    def __str__(self) -> str:
        return self.render()

    def exact_repr(self) -> str:
        """Unfactored form listing every coefficient as num/den."""
        body = ""
        for b, c in self.terms:
            text = str(abs(c)) if b is Basis.ONE else f"{abs(c)}*{b.value}"
            if not body:
                body = ("-" if c < 0 else "") + text
            else:
                body += (" - " if c < 0 else " + ") + text
        body = body or "0"
        head = "sqrt3*" if self.sqrt3 else ""
        return f"{head}({body})/pi^{self.pi_power}"
