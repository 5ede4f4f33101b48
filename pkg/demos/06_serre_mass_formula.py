"""The mass formula for tame extensions of F_q((t)), verified by enumeration.

Totally tamely ramified degree-n extensions are radical: y^n = u t with u a
unit of the residue field, up to u ~ u c^n.  Each class is weighted by
1/#Aut times q^(-(n-1)); the weighted total collapses to q^(1-n) because the
class count and the automorphism count both equal gcd(n, q - 1).  Everything
below is computed by explicit finite-field arithmetic, not by the gcd
shortcut.
"""

from stringymass import FiniteField, aut_order, enumerate_tame_classes, serre_mass

print("== F_9 = F_3[x]/(x^2 + 1), degree n = 4 ==")
field = FiniteField.of_order(9)
print(f"multiplicative generator found by search: {field.multiplicative_generator()}")
classes = enumerate_tame_classes(field, 4)
for cls in classes:
    print(f"  y^4 = u t with u = {cls.unit}: disc exponent {cls.disc_exponent},"
          f" #Aut = {cls.aut_order}")
mass, expected = serre_mass(field, 4)
print(f"mass = {mass} and q^(1-n) = {expected}: equal = {mass == expected}")

print()
print("== The identity across residue fields and degrees ==")
print(f"{'q':>4} {'n':>3} {'classes':>8} {'#Aut':>5} {'mass':>12}")
for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49):
    field = FiniteField.of_order(q)
    for n in (2, 3, 5, 12):
        if n % field.p == 0:
            continue
        classes = enumerate_tame_classes(field, n)
        mass, expected = serre_mass(field, n)
        assert mass == expected
        print(f"{q:>4} {n:>3} {len(classes):>8} {aut_order(field, n):>5} {str(mass):>12}")
