"""Closed forms of the Ai^4 and Ai^3 Bi moments at integer and half-integer alpha,
compared with the c-series and with direct quadrature."""
from airymellin.mellin import mellin, mellin_halfinteger, mellin_integer
from airymellin.quadrature import moment_quadrature

print(f"{'kind':6} {'alpha':>5}  {'closed form':42} {'series - closed':>16} {'quad - closed':>14}")
for kind in ("ai4", "ai3bi"):
    for alpha in (1, 2, 3, 4, 5, 6):
        cf = mellin_integer(kind, alpha)
        v = float(cf)
        s = mellin(kind, alpha).value
        q = moment_quadrature(kind, alpha).value
        print(f"{kind:6} {alpha:5}  {cf.render():42} {(s - v) / v:16.1e} {(q - v) / v:14.1e}")
    for m in range(3):
        cf = mellin_halfinteger(kind, m)
        v = float(cf)
        s = mellin(kind, 3 * m + 2.5).value
        print(f"{kind:6} {3 * m + 2.5:5}  {cf.render():42} {(s - v) / v:16.1e}")
