"""Shifted moments int_0^inf x^(alpha-1) f(x + c) dx as functions of c, for the three
quartic Airy products.  The series in c is checked against quadrature at each point.
For large c the Ai^4 moment is tiny and the alternating series loses relative accuracy,
so the table compares the absolute gap with the series' own error estimate."""
from airymellin.mellin import mellin
from airymellin.quadrature import moment_quadrature

alpha = 0.7
print(f"alpha = {alpha}")
print(f"{'c':>5} {'Ai^4':>14} {'Ai^3 Bi':>14} {'Ai^2 Bi^2':>14} {'max |gap|/est':>14}")
for c in (-2.0, -1.0, 0.0, 0.5, 1.0, 2.0, 3.0):
    row, worst = [], 0.0
    for kind in ("ai4", "ai3bi", "ai2bi2"):
        s = mellin(kind, alpha, c)
        q = moment_quadrature(kind, alpha, c)
        row.append(s.value)
        worst = max(worst, abs(s.value - q.value) / (s.abs_error_estimate + q.abs_error_bound))
    print(f"{c:5} {row[0]:14.8e} {row[1]:14.8e} {row[2]:14.8e} {worst:14.2f}")
