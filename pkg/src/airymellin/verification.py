"""Self-check suites run by ``airymellin verify``.

Each check compares two independently computed numbers and reports the
residual against a threshold.  The elliptic half-integer checks and the
second 2F1 identity use the forms confirmed numerically in this package
(see README, "Known discrepancies"); the acceptance tests additionally
exercise the forms exactly as they are usually quoted.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .airy import ProductKind, airy_eval
from .closed_form import Basis
from .hyp import (
    Identity,
    eval_2f1_threequarters_via_quarter,
    gauss_2f1,
    identity_residual,
    rel9_2f1,
    vidunas_2f1,
)
from .mellin import (
    Family,
    ai3bi_from_pq,
    mellin,
    mellin_ai3bi_integer,
    mellin_ai4_integer,
    mellin_halfinteger,
    pq_extract,
    seq_y,
    seq_y_representation,
    seq_z,
    seq_z_representation,
)
from .quadrature import moment_quadrature, regularized_ai2bi2, regularized_ai2bi2_rational
from .scalar_special import CONSTANTS, elliptic_E, elliptic_K, gamma

__all__ = ["Check", "SUITES", "run_suite"]

SUITES = ("airy", "hyp", "mellin", "regularized")
GRID_ALPHA = (0.4, 1.0, 1.7, 2.0, 2.5, 3.0, 4.2)
GRID_C = (-1.0, 0.0, 0.6, 2.0)
REID = (4 * CONSTANTS.euler_gamma + 12 * CONSTANTS.ln2 - CONSTANTS.ln3) / (24 * math.pi ** 2)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.threshold


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b else abs(a)


def _airy_checks():
    out = []
    for x in (-5.0, 0.0, 5.0):
        out.append((f"wronskian x={x:g}", lambda x=x: _rel(airy_eval(x).wronskian, 1 / math.pi), 1e-12))
    ai0 = 3.0 ** (-2.0 / 3.0) / gamma(2.0 / 3.0)
    out.append(("Ai(0)", lambda: _rel(airy_eval(0.0).ai, ai0), 1e-14))
    out.append(("kappa = -Ai'(0)/Ai(0)", lambda: _rel(-airy_eval(0.0).ai_prime / airy_eval(0.0).ai, CONSTANTS.kappa), 1e-14))

    def legendre():
        worst = 0.0
        for i in range(1, 10):
            k = i / 10
            kp = math.sqrt(1 - k * k)
            lhs = elliptic_E(k) * elliptic_K(kp) + elliptic_E(kp) * elliptic_K(k) - elliptic_K(k) * elliptic_K(kp)
            worst = max(worst, _rel(lhs, math.pi / 2))
        return worst

    out.append(("Legendre relation", legendre, 1e-12))

    def reflection():
        rng = random.Random(7)
        worst = 0.0
        for _ in range(200):
            x = rng.uniform(0.05, 0.95)
            worst = max(worst, _rel(gamma(x) * gamma(1 - x), math.pi / math.sin(math.pi * x)))
        return worst

    def recurrence():
        rng = random.Random(11)
        worst = 0.0
        for _ in range(200):
            x = rng.uniform(0.1, 30.0)
            worst = max(worst, _rel(gamma(x + 1), x * gamma(x)))
        return worst

    out.append(("gamma reflection", reflection, 1e-13))
    out.append(("gamma recurrence", recurrence, 1e-13))
    return out


def _hyp_checks():
    out = [
        ("2F1(1,1/2;3/2|1/4) = ln3", lambda: _rel(gauss_2f1(1, 0.5, 1.5, 0.25), math.log(3)), 1e-14),
        ("2F1(1/2,1/2;3/2|3/4) = 2pi/(3 sqrt3)",
         lambda: _rel(gauss_2f1(0.5, 0.5, 1.5, 0.75), 2 * math.pi / (3 * math.sqrt(3))), 1e-13),
    ]
    for ident in Identity:
        def worst(ident=ident):
            rng = random.Random(ord(ident.value))
            return max(identity_residual(ident, rng.uniform(0.2, 3.0)) for _ in range(30))

        out.append((f"identity {ident.value}", worst, 1e-11))

    def vidunas():
        w = 0.0
        for m in range(6):
            for a, n in ((-m - 4 / 3, 3 * m + 3), (-m - 5 / 3, 3 * m + 4)):
                w = max(w, _rel(vidunas_2f1(a, n), gauss_2f1(-a, 0.5, n + 2 * a + 1.5, 0.25)))
        return w

    def rel9():
        return max(_rel(rel9_2f1(m, a), gauss_2f1(m + 1, 0.5, m + 1.5, a * a))
                   for m in range(11) for a in (0.1, 0.5, 0.9))

    def three_quarters():
        rng = random.Random(3)
        w = 0.0
        for _ in range(50):
            a = rng.uniform(-3, 3)
            w = max(w, _rel(eval_2f1_threequarters_via_quarter(a), gauss_2f1(a, 0.5, 1.0, 0.75)))
        return w

    out += [("Vidunas sums", vidunas, 1e-10), ("log/double-sum form", rel9, 1e-10),
            ("z=3/4 via z=1/4", three_quarters, 1e-10)]
    return out


def _mellin_checks():
    pi2 = math.pi ** 2
    ln3 = CONSTANTS.ln3
    out = [("alpha=1 Ai^4 = ln3/(24 pi^2)", lambda: _rel(mellin("ai4", 1).value, ln3 / (24 * pi2)), 1e-12)]

    expected = {
        2: {Basis.KAPPA_INV: Fraction(1, 48), Basis.KAPPA2: Fraction(-1, 32)},
        3: {Basis.KAPPA_INV2: Fraction(7, 768), Basis.KAPPA: Fraction(-1, 64)},
        4: {Basis.LN3: Fraction(5, 384), Basis.ONE: Fraction(-1, 96)},
    }
    for alpha, coeffs in expected.items():
        out.append((f"alpha={alpha} exact coefficients",
                    lambda a=alpha, c=coeffs: float(dict(mellin_ai4_integer(a).terms) != c), 0.0))

    def integer_vs_series():
        return max(max(_rel(float(mellin_ai4_integer(a)), mellin("ai4", a).value),
                       _rel(float(mellin_ai3bi_integer(a)), mellin("ai3bi", a).value)) for a in range(1, 13))

    K1, E1 = elliptic_K(0.5), elliptic_E(0.5)
    E3 = elliptic_E(math.sqrt(3) / 2)
    out += [
        ("integer forms vs series", integer_vs_series, 1e-11),
        ("Ai^4(5/2) = (K-E)(1/2)/(16 pi^2 sqrt3)",
         lambda: _rel(float(mellin_halfinteger("ai4", 0)), (K1 - E1) / (16 * pi2 * math.sqrt(3))), 1e-11),
        ("Ai^3Bi(5/2) = E(sqrt3/2)/(16 pi^2 sqrt3)",
         lambda: _rel(float(mellin_halfinteger("ai3bi", 0)), E3 / (16 * pi2 * math.sqrt(3))), 1e-11),
        ("half-integer forms vs series",
         lambda: max(_rel(float(mellin_halfinteger(k, m)), mellin(k, 3 * m + 2.5).value)
                     for k in ("ai4", "ai3bi") for m in range(6)), 1e-11),
    ]

    def recurrence(seq, rep):
        def run():
            w = 0.0
            for beta in (Fraction(1), Fraction(5, 2), Fraction(3)):
                b = float((beta + 2) / 3)
                vals = [seq(m, beta) for m in range(17)]
                for m in range(1, 16):
                    t = (4 * (m + b) ** 2 * vals[m + 1], 5 * (m + b - 0.5) * vals[m], vals[m - 1])
                    w = max(w, abs(t[0] - t[1] + t[2]) / max(map(abs, t)))
                    w = max(w, _rel(rep(m, beta), vals[m]))
            return w
        return run

    out += [("y_m recurrence and P/Q form", recurrence(seq_y, seq_y_representation), 1e-11),
            ("z_m recurrence and P/Q form", recurrence(seq_z, seq_z_representation), 1e-11)]

    def pq_cross():
        bad = 0
        for fam in Family:
            for m in range(7):
                p, q = pq_extract(fam, m)
                alpha = 3 * m + {Family.F1: 1, Family.F2: 2, Family.F3: 3}[fam]
                bad += ai3bi_from_pq(fam, p, q) != mellin_ai3bi_integer(alpha)
        return float(bad)

    out.append(("p,q cross-consistency (exact)", pq_cross, 0.0))

    def grid(kind):
        def run():
            w = 0.0
            for a in GRID_ALPHA:
                if kind == "ai2bi2" and a >= 1:
                    continue
                for c in GRID_C:
                    s = mellin(kind, a, c).value
                    q = moment_quadrature(kind, a, c, 1e-10).value
                    w = max(w, abs(s - q) / max(1e-8 * abs(q), 1e-12))
            return w
        return run

    for kind in ProductKind:
        out.append((f"series vs quadrature grid ({kind.value}, scaled residual)", grid(kind.value), 1.0))
    return out


def _regularized_checks():
    four_pi2 = 4 * math.pi ** 2
    return [
        ("a=1, b=0", lambda: _rel(regularized_ai2bi2(1, 0).value, REID), 1e-8),
        ("a=0, b=1", lambda: _rel(regularized_ai2bi2(0, 1).value, REID), 1e-8),
        ("rational compensator", lambda: _rel(regularized_ai2bi2_rational().value,
                                              CONSTANTS.euler_gamma / (6 * math.pi ** 2)), 1e-8),
        ("ln(a+b) dependence",
         lambda: max(abs(regularized_ai2bi2(a, b).value - math.log(a + b) / four_pi2 - REID)
                     for a, b in ((2, 3), (4, 1), (0.5, 0.7), (3, -1), (0, 2.5))), 1e-9),
    ]


_BUILDERS = {"airy": _airy_checks, "hyp": _hyp_checks, "mellin": _mellin_checks, "regularized": _regularized_checks}


def _run_one(item):
    suite, name, fn, threshold, scale = item
    try:
        residual = float(fn())
    except Exception as exc:  # a crash is a failed check, reported like any other
        return Check(suite, f"{name} [{type(exc).__name__}: {exc}]", math.inf, threshold * scale)
    return Check(suite, name, residual, threshold * scale)


def run_suite(suite: str = "all", tol_scale: float = 1.0, jobs: int = 1) -> list[Check]:
    """Run one suite (or all) and return the checks in a fixed order."""
    names = SUITES if suite == "all" else (suite,)
    if any(n not in _BUILDERS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    items = [(s, name, fn, thr, tol_scale) for s in names for name, fn, thr in _BUILDERS[s]()]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, items))
    return [_run_one(it) for it in items]
