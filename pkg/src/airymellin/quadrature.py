"""Direct quadrature of the Mellin moments: the independent oracle.

Adaptive 15-point Gauss-Kronrod on a finite window [0, X] plus an analytic
treatment of [X, inf):

* Ai^4 and Ai^3 Bi decay like exp(-4 zeta) and exp(-2 zeta); X is pushed out
  until a rigorous envelope bound on the tail is negligible.
* Ai^2 Bi^2 decays only like 1/(4 pi^2 x), so its tail is integrated term
  by term from the large-x expansion sum_j s_j (c+x)^(-1-3j) / (4 pi^2).

Nothing here touches the hypergeometric machinery, so agreement with
:mod:`airymellin.mellin` is a genuine two-route check.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .airy import _U, ProductKind, quartic_product
from .errors import ConvergenceError, DomainError

__all__ = [
    "QuadratureResult",
    "gauss_kronrod",
    "moment_quadrature",
    "regularized_ai2bi2",
    "regularized_ai2bi2_rational",
    "ai2bi2_asymptotic_coefficients",
]

# 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_FOUR_PI2 = 4.0 * math.pi ** 2
_EPS = 2.0 ** -52
DEFAULT_TOL = 1e-10
PANEL_BUDGET = 4000


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_bound: float
    panels: int
    tail_cut: float


def _gk15(f, a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fc = f(mid)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        s = f(mid - dx) + f(mid + dx)
        kron += _WGK[j] * s
        if j % 2 == 1:
            gauss += _WG[j // 2] * s
    kron *= half
    err = abs(kron - gauss * half)
    # rounding floor
    return kron, max(err, 10 * _EPS * abs(kron))


def gauss_kronrod(f, breaks, tol: float, abs_floor: float = 0.0, budget: int = PANEL_BUDGET):
    """Globally adaptive GK15 over consecutive intervals given by ``breaks``.

    Bisects the panel with the largest error estimate until the summed
    estimate is below max(tol*|value|, abs_floor).  Returns
    (value, error, panels).  Relative tolerances below 50 ulp are raised to it.
    """
    tol = max(tol, 50 * _EPS)  # below this the rounding floor can never be met
    heap = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b > a:
            v, e = _gk15(f, a, b)
            heap.append((-e, a, b, v))
    heapq.heapify(heap)
    while True:
        value = math.fsum(item[3] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        if err <= max(tol * abs(value), abs_floor):
            return value, err, len(heap)
        if len(heap) >= budget:
            raise ConvergenceError(
                f"quadrature panel budget {budget} exhausted (error {err:.3g}, value {value:.6g})"
            )
        _, a, b, _ = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not a < m < b:
            raise ConvergenceError("quadrature panel width underflow")
        for lo, hi in ((a, m), (m, b)):
            v, e = _gk15(f, lo, hi)
            heapq.heappush(heap, (-e, lo, hi, v))


def ai2bi2_asymptotic_coefficients(n: int = 12) -> list[float]:
    """s_j with Ai^2(z) Bi^2(z) ~ (1/(4 pi^2)) sum_j s_j z^(-1-3j) as z -> inf."""
    u = _U[: 2 * n + 1]
    even = []
    for j in range(n):
        k2 = 2 * j
        even.append(sum(u[k] * u[k2 - k] * (-1) ** (k2 - k) for k in range(k2 + 1)))
    sq = [sum(even[i] * even[j - i] for i in range(j + 1)) for j in range(n)]
    return [sq[j] * 2.25 ** j for j in range(n)]


_S = ai2bi2_asymptotic_coefficients()


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not tol > 0:
        raise DomainError("tol must be positive")
    return tol


def _window_breaks(c: float, X: float) -> list[float]:
    """Unit panels through the oscillatory stretch (c < 0), then geometric."""
    pts = [0.0]
    if c < 0:
        stop = min(X, -c + 2.0)
        pts += [float(k) for k in range(1, int(stop) + 1)]
        if pts[-1] < stop:
            pts.append(stop)
    x = max(pts[-1], 1.0)
    while x < X:
        pts.append(x) if x > pts[-1] else None
        x *= 2.0
    if pts[-1] < X:
        pts.append(X)
    return pts


def _moment_integrand(kind: ProductKind, alpha: float, c: float):
    """(g, to_var): integrand in the quadrature variable and the x -> variable map."""
    if alpha < 1.0:
        # t = x**alpha: x**(alpha-1) dx = dt/alpha, smooth at the origin
        inv = 1.0 / alpha

        def g(t):
            return inv * quartic_product(c + t ** inv, kind)

        return g, lambda x: x ** alpha

    am1 = alpha - 1.0

    def g(x):
        return (x ** am1 if am1 else 1.0) * quartic_product(c + x, kind)

    return g, lambda x: x


def _exp_tail_bound(kind: ProductKind, alpha: float, c: float, X: float) -> float:
    """Rigorous bound on int_X^inf x^(alpha-1) |P(c+x)| dx for c + X >= 2.

    Uses Ai(z) <= e^(-zeta)/(2 sqrt(pi) z^(1/4)) and Bi(z) <= 1.5 e^(zeta)/(sqrt(pi) z^(1/4))
    for z >= 2, so |P| <= A e^(-k zeta)/z.  The log-derivative of
    x^(alpha-1) e^(-k zeta)/z is at most -lam on [X, inf), giving value(X)/lam.
    """
    Z = c + X
    if Z < 2.0:
        return math.inf
    k, A = (4.0, 1.0 / (16 * math.pi ** 2)) if kind is ProductKind.AI4 else (2.0, 1.5 / (8 * math.pi ** 2))
    zeta = 2.0 / 3.0 * Z ** 1.5
    lam = k * math.sqrt(Z) - max(alpha - 1.0, 0.0) / X
    if lam <= 0:
        return math.inf
    return A * math.exp((alpha - 1.0) * math.log(X) - k * zeta) / Z / lam


def _ai2bi2_tail(alpha: float, c: float, X: float) -> tuple[float, float]:
    """int_X^inf x^(alpha-1) Ai^2 Bi^2(c+x) dx from the large-argument expansion."""
    total = 0.0
    last = 0.0
    r = c / X
    for j, s in enumerate(_S):
        # sum_l binom(-1-3j, l) c^l X^(alpha-1-3j-l) / (1-alpha+3j+l)
        inner = 0.0
        coef = 1.0
        rl = 1.0
        for l in range(400):
            t = coef * rl / (1.0 - alpha + 3 * j + l)
            inner += t
            if abs(t) <= 1e-18 * abs(inner):
                break
            coef *= (-1 - 3 * j - l) / (l + 1)
            rl *= r
        term = s * X ** (alpha - 1 - 3 * j) * inner
        if j and abs(term) > abs(last):
            break
        total += term
        last = term
        if abs(term) <= 1e-18 * abs(total):
            break
    return total / _FOUR_PI2, abs(last) / _FOUR_PI2 + 1e-15 * abs(total) / _FOUR_PI2


def moment_quadrature(kind, alpha: float, c: float = 0.0, tol: float = DEFAULT_TOL,
                      min_cut: float = 0.0) -> QuadratureResult:
    """int_0^inf x^(alpha-1) P(c+x) dx by adaptive Gauss-Kronrod plus an analytic tail.

    ``tol`` is relative.  For alpha < 1 the variable t = x**alpha is used;
    for alpha >= 1 the weight is already bounded and x is integrated directly.
    ``min_cut`` forces the numerical window out to at least that abscissa.
    """
    kind = ProductKind(kind)
    alpha = float(alpha)
    c = float(c)
    tol = _check_tol(tol)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if not c >= -10.0:
        raise DomainError(f"quadrature oracle needs c >= -10, got {c!r}")
    g, to_var = _moment_integrand(kind, alpha, c)

    if kind is ProductKind.AI2BI2:
        if not alpha < 1.0:
            raise DomainError(f"the Ai^2 Bi^2 moment diverges for alpha >= 1 (alpha={alpha})")
        X = max(30.0 + 3.0 * abs(c), float(min_cut))
        tail, tail_err = _ai2bi2_tail(alpha, c, X)
        breaks = [to_var(x) for x in _window_breaks(c, X)]
        # pass a slightly tighter target to the window so the tail error fits too
        v, e, n = gauss_kronrod(g, breaks, 0.5 * tol, abs_floor=1e-300)
        return QuadratureResult(v + tail, e + tail_err, n, X)

    X = max(4.0, 4.0 - c, float(min_cut))
    v, e, n = gauss_kronrod(g, [to_var(x) for x in _window_breaks(c, X)], 0.5 * tol, abs_floor=1e-300)
    while True:
        bound = _exp_tail_bound(kind, alpha, c, X)
        if bound <= 0.1 * tol * abs(v):
            return QuadratureResult(v, e + bound, n, X)
        if X > 400:
            raise ConvergenceError("tail bound did not become negligible")
        X_new = 1.5 * X
        dv, de, dn = gauss_kronrod(g, [to_var(X), to_var(X_new)], 0.5 * tol, abs_floor=0.25 * tol * abs(v))
        v, e, n, X = v + dv, e + de, n + dn, X_new


def _asym_excess_tail(X: float) -> tuple[float, float]:
    """int_X^inf (Ai^2 Bi^2(x) - 1/(4 pi^2 x)) dx = sum_{j>=1} s_j X^(-3j)/(3j) / (4 pi^2)."""
    total = 0.0
    last = 0.0
    for j in range(1, len(_S)):
        term = _S[j] * X ** (-3 * j) / (3 * j)
        if abs(term) > abs(last) and j > 1:
            break
        total += term
        last = term
    return total / _FOUR_PI2, abs(last) / _FOUR_PI2


def _ai2bi2(x: float) -> float:
    return quartic_product(x, ProductKind.AI2BI2)


def regularized_ai2bi2(a: float, b: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """int_0^a Ai^2Bi^2 dx + int_a^inf (Ai^2Bi^2 - 1/(4 pi^2 (x+b))) dx.

    Equals a constant plus ln(a+b)/(4 pi^2).
    """
    a, b = float(a), float(b)
    tol = _check_tol(tol)
    if a < 0 or not a + b > 0:
        raise DomainError(f"need a >= 0 and a + b > 0, got a={a}, b={b}")
    X = max(30.0, 2.0 * a, 4.0 * abs(b))
    floor = 1e-3 * tol

    def comp(x):
        return _ai2bi2(x) - 1.0 / (_FOUR_PI2 * (x + b))

    parts = []
    if a > 0:
        parts.append(gauss_kronrod(_ai2bi2, _window_breaks(0.0, a), 0.5 * tol, abs_floor=floor))
    brk = [p for p in _window_breaks(0.0, X) if p > a]
    parts.append(gauss_kronrod(comp, [a] + brk, 0.5 * tol, abs_floor=floor))
    excess, excess_err = _asym_excess_tail(X)
    tail = excess + math.log1p(b / X) / _FOUR_PI2
    value = math.fsum([p[0] for p in parts] + [tail])
    err = sum(p[1] for p in parts) + excess_err + 4 * _EPS * abs(tail)
    return QuadratureResult(value, err, sum(p[2] for p in parts), X)


def regularized_ai2bi2_rational(tol: float = DEFAULT_TOL) -> QuadratureResult:
    """int_0^inf (Ai^2Bi^2 - 4x/(pi^2 (16 x^2 + 3^(1/3)))) dx."""
    tol = _check_tol(tol)
    k = 3.0 ** (1.0 / 3.0)
    X = 30.0

    def comp(x):
        return _ai2bi2(x) - 4.0 * x / (math.pi ** 2 * (16.0 * x * x + k))

    v, e, n = gauss_kronrod(comp, _window_breaks(0.0, X), 0.5 * tol, abs_floor=1e-3 * tol)
    excess, excess_err = _asym_excess_tail(X)
    tail = excess + math.log1p(k / (16.0 * X * X)) / (2.0 * _FOUR_PI2)
    return QuadratureResult(v + tail, e + excess_err + 4 * _EPS * abs(tail), n, X)
