"""Workload-allocation demo: a five-department company as a fuzzy star.

A coordinating department D shares work with four departments D1..D4.
Working abilities live in [0, 1], so the allocation is exactly the magic
star labeling on 4 leaves with unit 1/15: each department's own share plus
its shared load plus the coordinator's share totals 100%.
"""

from __future__ import annotations

from fractions import Fraction

from .construct import label_star
from .labels import format_percent

UNIT = Fraction(1, 15)


def workload_labeling():
    return label_star(4, unit=UNIT)


def workload_rows() -> list[tuple[str, str]]:
    """(name, percentage) pairs: D, D1..D4, E1..E4 then the four totals."""
    labeling = workload_labeling()
    g = labeling.graph
    rows = [("D", format_percent(g.alpha[0]))]
    rows += [(f"D{i}", format_percent(g.alpha[i])) for i in range(1, 5)]
    rows += [(f"E{i}", format_percent(g.beta[(0, i)])) for i in range(1, 5)]
    for i in range(1, 5):
        total = g.alpha[0] + g.alpha[i] + g.beta[(0, i)]
        rows.append((f"D+D{i}+E{i}", format_percent(total)))
    return rows


def demo_workload() -> str:
    """Render the allocation table; every percentage is computed in exact
    rational arithmetic and formatted with round-half-up."""
    rows = workload_rows()
    width = max(len(name) for name, _ in rows)
    lines = ["Department workload allocation (star, 4 departments, unit 1/15)", ""]
    lines += [f"{name:<{width}}  {value}" for name, value in rows]
    return "\n".join(lines) + "\n"
