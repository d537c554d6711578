"""Workload allocation as a fuzzy magic star.

A coordinator department D shares a project with four departments
D1..D4.  Working abilities are membership degrees in [0, 1], and the
requirement "own work + shared work + coordinator's work = 100% for every
department" is exactly the magic-sum condition on a star with 4 leaves.
With unit 1/15 the magic constant is exactly 1.

Run:  python3 demos/workload_allocation.py
"""

from fractions import Fraction

from fuzzymagic import label_star, magic_constant_of
from fuzzymagic.demo import demo_workload

print(demo_workload())

labeling = label_star(4, unit=Fraction(1, 15))
print("magic constant m(G) =", magic_constant_of(labeling.graph))
print("coefficients:", labeling.vertex_coefficients, labeling.edge_coefficients)
