"""Exhaustive coefficient-grid search as an independent oracle.

Three experiments:
  1. the search rediscovers the closed-form triangle labeling,
  2. the closed-form star constant is not minimal (T = 8 beats 3(n+1) = 9),
  3. even cycles, which the closed forms skip, are probed empirically.

Run:  python3 demos/grid_search.py
"""

from fractions import Fraction

from fuzzymagic import (
    SearchSpec,
    cycle_structure,
    enumerate_magic,
    explore_family,
    minimal_magic_coefficient,
    star_structure,
)

d = Fraction(1, 100)

print("all magic labelings of the triangle with coefficients <= 6, sum 12:")
result = enumerate_magic(
    cycle_structure(3), SearchSpec(max_coefficient=6, target=12, unit=d)
)
for s in result.solutions:
    print(f"  vertices {s.vertex_coefficients}  edges {s.edge_coefficients}")
print(f"exhausted: {result.exhausted}\n")

print("minimal magic sum for the 2-leaf star (closed form gives 9):")
target, witness = minimal_magic_coefficient(star_structure(2), K=5, unit=Fraction(1, 10))
print(f"  T = {target}, witness vertices {witness.vertex_coefficients}, "
      f"edges {witness.edge_coefficients}\n")

print("do even cycles admit grid magic labelings?  (evidence within K = 2n, d = 1/100)")
rows = explore_family(
    ((n, cycle_structure(n)) for n in (3, 4, 5, 6)),
    max_coefficient=lambda n: 2 * n,
    unit=d,
)
for row in rows:
    if row.found:
        print(f"  n={row.n}: found, minimal T = {row.target}, "
              f"witness vertices {row.witness.vertex_coefficients}")
    else:
        print(f"  n={row.n}: none within the searched grid")
