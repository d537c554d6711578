"""Closed-form magic labelings for paths, stars and odd cycles.

Walks through each family: the integer coefficients, the unit d, the
magic constant, and the verifier's certificate.  Also shows where the
published unit tables disagree with the minimal unit.

Run:  python3 demos/family_constructions.py
"""

from fuzzymagic import (
    Family,
    FamilySpec,
    label_cycle,
    label_path,
    label_star,
    magic_coefficient,
    minimal_unit,
    paper_unit,
    verify_magic,
)
from fuzzymagic.construct import TableGap
from fuzzymagic.labels import format_label
from fuzzymagic.serialize import to_dot

for name, labeling in [
    ("path, 3 edges", label_path(3)),
    ("star, 4 leaves", label_star(4)),
    ("cycle, length 5", label_cycle(5)),
]:
    report = verify_magic(labeling.graph)
    print(f"{name}:")
    print(f"  vertex coefficients {labeling.vertex_coefficients}")
    print(f"  edge coefficients   {labeling.edge_coefficients}")
    print(f"  unit d = {labeling.unit}, m(G) = {format_label(report.magic_constant)}")
    assert report.verdict
print()

print("DOT rendering of the 3-cycle:")
print(to_dot(label_cycle(3)))

# Every edge sum uses each coefficient set exactly once: edges {1..n},
# vertices {n+1..2n+1} (path/star) or {n+1..2n} (cycle).  The magic
# coefficient M with m(G) = M*d comes out as (7n+5)/2, 3(n+1), (7n+3)/2.
for family, n in [(Family.PATH, 9), (Family.STAR, 9), (Family.CYCLE, 9)]:
    spec = FamilySpec(family, n)
    M = magic_coefficient(spec)
    print(f"{family.value} n={n}: M = {M}, minimal unit = {minimal_unit(M)}")
print()

print("published unit table vs minimal unit (star family):")
for n in [2, 3, 9, 10, 27, 28, 33]:
    spec = FamilySpec(Family.STAR, n)
    try:
        d, deviates = paper_unit(spec)
        note = "DEVIATES" if deviates else "agrees"
        print(f"  n={n}: table gives {d} ({note})")
    except TableGap:
        print(f"  n={n}: table gap; minimal unit is "
              f"{minimal_unit(magic_coefficient(spec))}")
