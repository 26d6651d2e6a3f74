"""The (p, q) pairs read off the Ai^4 closed forms determine the Ai^3 Bi closed forms
of the same alpha exactly, family by family."""
from airymellin.mellin import Family, ai3bi_from_pq, mellin_ai3bi_integer, pq_extract

offset = {Family.F1: 1, Family.F2: 2, Family.F3: 3}
for family in Family:
    for m in range(4):
        p, q = pq_extract(family, m)
        alpha = 3 * m + offset[family]
        ok = ai3bi_from_pq(family, p, q) == mellin_ai3bi_integer(alpha)
        print(f"{family.value} m={m} alpha={alpha:2}  p={str(p):>22}  q={str(q):>22}  {'exact' if ok else 'MISMATCH'}")
