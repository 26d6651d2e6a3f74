"""The divergent first moment of Ai^2 Bi^2 made finite by subtracting the 1/(4 pi^2 x)
tail, and its log dependence on the subtraction scale."""
import math

from airymellin.quadrature import regularized_ai2bi2, regularized_ai2bi2_rational
from airymellin.scalar_special import CONSTANTS

PI2 = math.pi ** 2
g, l2, l3 = CONSTANTS.euler_gamma, CONSTANTS.ln2, CONSTANTS.ln3
target = (4 * g + 12 * l2 - l3) / (24 * PI2)
for a, b in ((1, 0), (0, 1), (2, 0), (0.5, 1.5)):
    v = regularized_ai2bi2(a, b).value
    shift = math.log(a + b) / (4 * PI2)
    print(f"a={a:<4} b={b:<4} value {v:.15f}  minus log(a+b)/(4 pi^2) {v - shift:.15f}")
print(f"expected constant              {target:.15f}")
r = regularized_ai2bi2_rational().value
print(f"rational compensator {r:.15f}  gamma/(6 pi^2) {g / (6 * PI2):.15f}")
