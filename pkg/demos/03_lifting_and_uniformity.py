"""Lifting a wild representation to the group ring and comparing masses.

A unipotent Jordan matrix in characteristic p lifts to an integral matrix
whose block of size d has diagonal 1, x, ..., x^(d-1) over Z[x]/(x^p - 1).
Any reduction away from p is then a diagonal tame representation, and its mass
can be compared with the wild mass term by term.  The two agree exactly when
D_V = p, via the exponent identity alpha(s) = s + w(s).
"""

from stringymass import WildCyclicRep, uniformity_check

print("== The lift and its exponents ==")
rep = WildCyclicRep(3, (3,))
lift = rep.lift()
print(f"p=3 blocks=(3,): lifted eigenvalue exponents per block = {lift.block_weights}")
for s in range(1, rep.p):
    print(f"  s={s}: alpha(s) = {lift.alpha(s)},  s + w(s) = {s + rep.weight(s)}")
print(f"wild mass   = {rep.mass().render()}")
print(f"lifted mass = {lift.tame_mass().render()}")

print()
print("== Uniform families: D_V = p is necessary and (here) sufficient ==")
for p, blocks in [(2, (2, 2)), (3, (2, 2, 2)), (3, (3,)), (5, (3, 2, 2)), (2, (2, 2, 2))]:
    rep = WildCyclicRep(p, blocks)
    verdict = uniformity_check(rep)
    status = "uniform" if verdict.uniform else f"not uniform ({verdict.reason})"
    print(f"p={p} blocks={blocks}: D_V={rep.d_invariant}  {status}")

print()
print("== The doubled-block family is the projective space class ==")
for p in (2, 3, 5, 7):
    rep = WildCyclicRep(p, (2,) * p)
    print(f"p={p}: mass of {p} doubled blocks = {rep.mass().render()}")
