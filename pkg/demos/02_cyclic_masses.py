"""Motivic masses of cyclic covers of a formal disk, tame and wild.

The mass is an L-weighted count of the covers.  In the tame case (group order
m prime to the residue characteristic) it is a sum of m powers of L graded by
age.  In the wild case (prime order p equal to the characteristic) the count
runs over ramification jumps and converges exactly when the block invariant
D_V = sum d_i(d_i - 1)/2 reaches p.
"""

from stringymass import TameCyclicRep, WildCyclicRep, euler_realize

print("== Tame masses: sums of L^age ==")
for m, weights in [(2, (1, 1)), (3, (1, 2)), (3, (1, 1)), (5, (1, 4))]:
    rep = TameCyclicRep(m, weights)
    ages = ", ".join(str(rep.age(s)) for s in range(m))
    print(f"1/{m}{weights}: ages [{ages}]  mass = {rep.mass().render()}")

print()
print("== Wild masses: convergence is governed by D_V ==")
for p, blocks in [(2, (2, 2)), (2, (2, 2, 2)), (3, (3,)), (3, (2, 2)), (3, (2, 2, 2)), (5, (4,))]:
    rep = WildCyclicRep(p, blocks)
    mass = rep.mass()
    euler = "infinity" if mass.is_infinite else euler_realize(mass)
    print(
        f"p={p} blocks={blocks}: D_V={rep.d_invariant}  "
        f"mass = {mass.render():28s} euler = {euler}"
    )

print()
print("== The Euler characteristic has a closed form: 1 + (p-1)/(D_V - p + 1) ==")
rep = WildCyclicRep(2, (2, 2, 2))
print(f"p=2 blocks=(2,2,2): euler_realize(mass) = {euler_realize(rep.mass())}")
print(f"                    closed form         = {rep.euler_mass()}")

print()
print("== Weight functions behind the masses ==")
rep = WildCyclicRep(3, (3,))
print(f"p=3 blocks=(3,): w(1) = {rep.weight(1)}, w(2) = {rep.weight(2)}")
tame = TameCyclicRep(3, (1, 2))
print(f"1/3(1,2): w(1) = {tame.weight(1)}, w(2) = {tame.weight(2)}")
