"""Which wild quotient singularities can admit a crepant resolution?

If a crepant resolution exists, the mass must have an integer Euler
characteristic and a Poincare function that is a polynomial in T; the first
forces D_V = p.  Sweeping all no-reflection configurations of dimension <= 4
leaves exactly two essential cases: p = 2 with blocks (2,2) and p = 3 with the
single block (3).  (Adding a trivial one-dimensional summand crosses the
quotient with an affine line and changes nothing, which is why (3,1) also
reports admissible.)
"""

from stringymass import WildCyclicRep, block_decompositions, crepant_conditions

for p in (2, 3, 5, 7):
    print(f"== p = {p}, all no-reflection configurations of dimension <= 4 ==")
    for blocks in block_decompositions(p, 4):
        rep = WildCyclicRep(p, blocks)
        if rep.has_reflection:
            continue
        report = crepant_conditions(rep)
        euler = "infinity" if report.euler_char is None else report.euler_char
        print(
            f"  blocks={str(blocks):12s} D_V={report.d_v}  euler={euler!s:8s} "
            f"P_st polynomial={str(report.pst_is_integral_polynomial):5s} -> {report.verdict}"
        )
    print()

print("An obstruction the Euler characteristic misses: p=5, single block of size 4")
report = crepant_conditions(WildCyclicRep(5, (4,)))
print(f"  euler = {report.euler_char} (an integer!), but P_st polynomial = "
      f"{report.pst_is_integral_polynomial}, so verdict = {report.verdict}")
print(f"  reason: {report.reason}")
