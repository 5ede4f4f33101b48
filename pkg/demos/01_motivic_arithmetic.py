"""A tour of the exact value ring: Laurent polynomials in L^(1/r).

Every invariant in this package is a polynomial, or a quotient of two
polynomials, in fractional powers of the Lefschetz class L.  This script walks
through the arithmetic: canonical reduction, geometric series, and the two
realizations (Euler characteristic at L = 1, Poincare functions via L -> T^2).
"""

from fractions import Fraction

from stringymass import (
    GeometricStrand,
    L,
    MotivicRational,
    ONE,
    euler_realize,
    geometric_sum,
    l_power,
    poincare_realize,
)

print("== Laurent polynomials in fractional powers of L ==")
x = ONE + l_power(Fraction(2, 3)) + l_power(Fraction(4, 3))
print(f"x            = {x.render()}")
print(f"ram. index   = {x.ramification_index}   (exponents live in (1/3)Z)")
print(f"x * (L^(2/3) - 1) = {(x * (l_power(Fraction(2, 3)) - 1)).render()}")

print()
print("== Rational functions reduce to canonical form ==")
q = MotivicRational(L**2 - 1, l_power(Fraction(2, 3)) - 1)
print(f"(L^2 - 1)/(L^(2/3) - 1) = {q.render()}   (the gcd in u = L^(1/3) cancels)")
q2 = MotivicRational((L - 1) * L, L - l_power(-1))
print(f"L(L - 1)/(L - L^(-1))   = {q2.render()}")

print()
print("== Geometric series ==")
s = geometric_sum(GeometricStrand(0, 1))
print(f"sum of L^(-i), i >= 0          = {s.render()}")
print(f"sum with step 0 (no decay)     = {geometric_sum(GeometricStrand(0, 0)).render()}")
partial = GeometricStrand(0, 1).partial_sum(8)
tail = s.value - MotivicRational(partial)
print(f"closed form minus 8 terms      = {tail.render()}   (tail is T-adically small)")

print()
print("== Realizations ==")
v = MotivicRational(ONE + 2 * L)
print(f"value        = {v.render()}")
print(f"Poincare     = {poincare_realize(v).render()}      (L -> T^2)")
print(f"Euler (L=1)  = {euler_realize(v)}")
print(f"Euler of {q2.render()} = {euler_realize(q2)}")
