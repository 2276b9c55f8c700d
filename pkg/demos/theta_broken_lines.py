"""The broken line behind the non-positive theta coefficient: over the
completed quantum A(2,3) diagram, exactly one broken line starts in
direction A^{-3f1+5f2} and ends at a basepoint in the positive chamber with
final exponent f1 - f2.  Its coefficient v^{-2} - 1 + v^2 has a negative
middle term, matching the greedy-basis value e(2,1).

Run: python3 demos/theta_broken_lines.py
"""

from fractions import Fraction

from qca.fixtures import a23
from qca.render import broken_line_svg
from qca.scatter import complete_to_order, initial_diagram
from qca.theta import enumerate_broken_lines, greedy_T, theta_function

dg = complete_to_order(initial_diagram(a23(), quantum=True, order=2), 2)
Q = (Fraction(1), Fraction(1))
M0 = (-3, 5)

print("greedy-basis dictionary: T(-3, 5) =", greedy_T(M0, 2, 3),
      " (the d-vector (3,4) of the comparison element)")

lines = enumerate_broken_lines(M0, Q, dg, 4, final_exponent=(1, -1))
print(f"{len(lines)} broken line(s) with final exponent (1, -1):")
for bl in lines:
    for seg, where in zip(bl.segments, ["from infinity"] +
                          [f"bend at {tuple(map(str, p))}" for p in bl.bend_points]):
        print(f"  {where}: ({seg.coeff.render_v()}) * A^{list(seg.exponent)}")
    print(f"  ends at Q = {tuple(map(str, bl.endpoint))}")

coeff = lines[0].final_decoration.coeff
print("coefficient of A^{f1-f2} in theta_{-3f1+5f2}:", coeff.render_v())
print("bar-invariant (v <-> 1/v):", coeff.bar() == coeff)

print()
print("the full theta function to total bend degree 4:")
th = theta_function(M0, Q, dg, 4)
print(" ", th.render())

with open("fig3_broken_line.svg", "w", encoding="utf-8") as fh:
    fh.write(broken_line_svg(dg, lines))
print("wrote fig3_broken_line.svg")
