"""The four classical specializations of the pattern expansion.

Setting t = 0 recovers Tokuyama's Schur deformation, t = 1 lands on the
monomial orbit sum, t = -1 connects to Stanley's formula for the Schur
q-polynomials, and q = -1, t = 0 gives the same formula through the
Tokuyama route.
"""

from hlgt import (
    hall_littlewood,
    hl_pattern_expansion,
    monomial,
    monomial_symmetric,
    schur,
    staircase,
    stanley_filtered_sum,
    stanley_sum,
    tokuyama_sum,
    weyl_denominator,
)

lam = (2, 1, 0)
n = len(lam)
closed = hl_pattern_expansion(lam)
vq = weyl_denominator(n, "q")

print(f"lambda = {lam}")
print()
print("t = 0 (Schur):")
print("  closed sum at t=0 == Tokuyama sum:",
      closed.substitute("t", 0) == tokuyama_sum(lam))
print("  Tokuyama sum == vq * schur:", tokuyama_sum(lam) == vq * schur(lam))

print()
print("t = 1 (monomial orbit sum):")
print("  HL at t=1 == monomial sum:",
      hall_littlewood(lam).substitute("t", 1) == monomial_symmetric(lam))
print("  closed at t=1 == vq * monomial:",
      closed.substitute("t", 1) == vq * monomial_symmetric(lam))

print()
print("t = -1 (Schur q-polynomials):")
hl_m1 = hall_littlewood(lam).substitute("t", -1)
print("  strict-pattern sum == HL at t=-1:", stanley_sum(lam) == hl_m1)
print("  filtered sum == x^staircase * HL at t=-1:",
      stanley_filtered_sum(lam) == monomial(1, staircase(n)) * hl_m1)

print()
print("q = -1, t = 0 (Stanley via the Tokuyama route):")
lhs = closed.substitute("q", -1).substitute("t", 0)
rhs = vq.substitute("q", -1) * schur(lam)
print("  closed at q=-1, t=0 == v(-1) * schur:", lhs == rhs)

print()
print("HL interpolates between them; at lambda = (1, 1):")
print("  HL(1,1) =", hall_littlewood((1, 1)))
print("  t=0:", hall_littlewood((1, 1)).substitute("t", 0),
      " t=1:", hall_littlewood((1, 1)).substitute("t", 1),
      " t=-1:", hall_littlewood((1, 1)).substitute("t", -1))
