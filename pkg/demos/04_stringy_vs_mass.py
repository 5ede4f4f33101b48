"""Stringy motifs from resolution data, and the mass identity.

For a quotient singularity without reflections, the stringy motif of the
quotient at the origin equals the motivic mass of the covers.  The stringy
side is computed from simple-normal-crossing resolution data by the exact sum
over strata weighted by (L - 1)/(L^(a + 1) - 1); this script checks it against
the group-theoretic mass for the two committed surface fixtures.

The fixtures record minimal resolutions of the cyclic quotients 1/2(1,1) and
1/3(1,1): a single exceptional rational curve (fiber class 1 + L) of
self-intersection -m, with discrepancy 2/m - 1.
"""

from pathlib import Path

from stringymass import (
    MotivicRational,
    SncStrataData,
    TameCyclicRep,
    dual_complex_euler_direct,
    dual_complex_euler_from_pst,
    duality_report,
    stringy_motif,
    stringy_poincare,
    L,
    ONE,
)

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

for name, rep in [
    ("a1_resolution.json", TameCyclicRep(2, (1, 1))),
    ("one_third_1_1_resolution.json", TameCyclicRep(3, (1, 1))),
]:
    data = SncStrataData.from_json(FIXTURES / name)
    motif = stringy_motif(data)
    mass = MotivicRational(rep.mass())
    print(f"{name}:")
    print(f"  stringy motif  = {motif.render()}")
    print(f"  tame mass      = {mass.render()}")
    print(f"  equal          = {motif == mass}")
    print(f"  Poincare       = {stringy_poincare(data).render()}")
    print(f"  chi(dual cx)   = {dual_complex_euler_from_pst(data)} (from P_st)"
          f" = {dual_complex_euler_direct(data)} (inclusion-exclusion)")
    print()

print("== Duality needs the center to be the whole proper space ==")
curve = SncStrataData(1, [("E1", 0)], {("E1",): ONE + L})
print(f"crepant proper curve, d=1: duality holds = {duality_report(curve)}")
point_center = SncStrataData.from_json(FIXTURES / "a1_resolution.json")
print(f"surface with center a point, d=2: duality holds = {duality_report(point_center)}")
