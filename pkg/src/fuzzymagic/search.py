"""Exhaustive search for magic labelings on an integer coefficient grid.

The continuous feasible set of the magic axioms is discretized to distinct
integer coefficients in {1..K}, each scaled by a unit d.  Every labeling
constructed in closed form lives on such a grid, so the search doubles as
an independent oracle for the constructors.  A miss on the grid does not
prove no magic labeling exists off it.

Strategy: vertices are assigned by backtracking in id order; as soon as
both endpoints of an edge are fixed, the edge coefficient is forced to
T - c(u) - c(v) and checked immediately (range, distinctness, strict edge
bound).  That derivation is the main pruning lever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .graph import Edge, FuzzyGraph, build_graph, canonical_edge, is_fuzzy_labeling
from .verify import verify_magic

DEFAULT_SOLUTION_LIMIT = 10_000


class Infeasible(ValueError):
    def __init__(self, needed, available):
        self.needed = needed
        self.available = available
        super().__init__(
            f"{needed} distinct coefficients required but only {available} available"
        )


class TargetTooLarge(ValueError):
    def __init__(self, target, unit):
        self.target = target
        self.unit = unit
        super().__init__(f"target {target}*{unit} = {target * unit} exceeds 1")


@dataclass(frozen=True)
class GraphStructure:
    """An unlabeled graph: the search decides the labels."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (u, v) != canonical_edge(u, v):
                raise ValueError(f"edge {(u, v)} not in canonical (min, max) order")
            if u not in seen or v not in seen:
                raise ValueError(f"edge {(u, v)} references unknown vertex")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edges")


def path_structure(n: int) -> GraphStructure:
    return GraphStructure(
        tuple(range(1, n + 2)), tuple((j, j + 1) for j in range(1, n + 1))
    )


def star_structure(n: int) -> GraphStructure:
    return GraphStructure(
        (0, *range(1, n + 1)), tuple((0, i) for i in range(1, n + 1))
    )


def cycle_structure(n: int) -> GraphStructure:
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return GraphStructure(tuple(range(1, n + 1)), tuple(sorted(edges)))


def default_unit(max_coefficient: int) -> Fraction:
    """Coarsest 10^-k that keeps every reachable target sum (at most
    3K - 3) within the unit interval."""
    from .construct import minimal_unit

    return minimal_unit(max(3 * max_coefficient - 3, 1))


@dataclass(frozen=True)
class SearchSpec:
    max_coefficient: int
    target: int | None = None
    unit: Fraction | None = None
    limit: int | None = DEFAULT_SOLUTION_LIMIT

    def resolved_unit(self) -> Fraction:
        return self.unit if self.unit is not None else default_unit(self.max_coefficient)


@dataclass(frozen=True)
class Solution:
    """One feasible assignment: coefficient maps plus the magic sum T."""

    target: int
    vertex_coefficients: dict[int, int]
    edge_coefficients: dict[Edge, int]

    def key(self, structure: GraphStructure) -> tuple:
        return tuple(self.vertex_coefficients[v] for v in structure.vertices) + tuple(
            self.edge_coefficients[e] for e in sorted(structure.edges)
        )

    def to_graph(self, unit: Fraction) -> FuzzyGraph:
        return build_graph(
            [(v, c * unit) for v, c in self.vertex_coefficients.items()],
            [(u, v, c * unit) for (u, v), c in self.edge_coefficients.items()],
        )


@dataclass(frozen=True)
class SearchResult:
    solutions: tuple[Solution, ...]
    exhausted: bool


def _search_target(structure: GraphStructure, K: int, target: int, sink: list, limit):
    vertices = structure.vertices
    incident_done: list[list[Edge]] = []
    placed: set[int] = set()
    for idx, v in enumerate(vertices):
        before = set(vertices[: idx + 1])
        incident_done.append(
            [e for e in structure.edges if v in e and set(e) <= before]
        )

    assignment: dict[int, int] = {}
    edge_values: dict[Edge, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        # returns False once the limit is hit, aborting the whole search
        if idx == len(vertices):
            sink.append(
                Solution(target, dict(assignment), dict(edge_values))
            )
            return limit is None or len(sink) < limit
        v = vertices[idx]
        for value in range(1, K + 1):
            if value in used:
                continue
            assignment[v] = value
            used.add(value)
            derived: list[Edge] = []
            ok = True
            for e in incident_done[idx]:
                c = target - assignment[e[0]] - assignment[e[1]]
                if c < 1 or c > K or c in used or c >= assignment[e[0]] + assignment[e[1]]:
                    ok = False
                    break
                edge_values[e] = c
                used.add(c)
                derived.append(e)
            if ok and not extend(idx + 1):
                return False
            for e in derived:
                used.discard(edge_values.pop(e))
            used.discard(value)
            del assignment[v]
        return True

    return extend(0)


def enumerate_magic(structure: GraphStructure, spec: SearchSpec) -> SearchResult:
    """All distinct-coefficient assignments making the structure magic.

    With a target T, only sums of T are sought; otherwise every T with
    T * d <= 1 is tried.  Solutions are returned sorted by their
    assignment vector (vertices in declaration order, then edges sorted).
    Every solution is re-checked through verify_magic before it is
    returned.
    """
    if not structure.edges:
        raise Infeasible(needed=1, available=0)
    need = len(structure.vertices) + len(structure.edges)
    K = spec.max_coefficient
    if K < need:
        raise Infeasible(need, K)
    unit = spec.resolved_unit()
    t_cap = int(Fraction(1) / unit)  # largest T with T*d <= 1
    if spec.target is not None:
        if spec.target * unit > 1:
            raise TargetTooLarge(spec.target, unit)
        targets: Iterable[int] = [spec.target]
    else:
        targets = range(6, min(3 * K - 2, t_cap + 1))

    sink: list[Solution] = []
    exhausted = True
    for T in targets:
        if not _search_target(structure, K, T, sink, spec.limit):
            exhausted = False
            break
    sink.sort(key=lambda s: (s.key(structure), s.target))

    for s in sink:
        g = s.to_graph(unit)
        report = verify_magic(g)
        assert report.verdict and report.magic_constant == s.target * unit
        assert bool(is_fuzzy_labeling(g))
    return SearchResult(tuple(sink), exhausted)


def minimal_magic_coefficient(
    structure: GraphStructure, K: int, unit: Fraction | None = None
):
    """Smallest feasible magic sum T on the grid, with one witness.

    Returns (T, witness) or None if no T up to floor(1/d) admits a
    solution with coefficients in {1..K}.
    """
    spec = SearchSpec(max_coefficient=K, unit=unit)
    d = spec.resolved_unit()
    t_cap = int(Fraction(1) / d)
    for T in range(6, min(3 * K - 2, t_cap + 1)):
        result = enumerate_magic(
            structure, SearchSpec(max_coefficient=K, target=T, unit=d, limit=1)
        )
        if result.solutions:
            return T, result.solutions[0]
    return None


@dataclass(frozen=True)
class FamilyReportRow:
    n: int
    found: bool
    target: int | None = None
    witness: Solution | None = None
    error: str | None = None


def explore_family(
    structures: Iterable[tuple[int, GraphStructure]],
    max_coefficient: int | Callable[[int], int],
    unit: Fraction | None = None,
) -> list[FamilyReportRow]:
    """Batch minimal-T search over a parametric family.

    `structures` yields (n, structure) pairs; `max_coefficient` is a fixed
    K or a function of n.  Rows record only what the grid search saw; a
    `found=False` row is evidence within (K, d), not a nonexistence proof.
    Per-structure errors are captured in the row rather than raised.
    """
    rows: list[FamilyReportRow] = []
    for n, structure in structures:
        K = max_coefficient(n) if callable(max_coefficient) else max_coefficient
        try:
            hit = minimal_magic_coefficient(structure, K, unit)
        except (Infeasible, TargetTooLarge, ValueError) as exc:
            rows.append(FamilyReportRow(n, False, error=str(exc)))
            continue
        if hit is None:
            rows.append(FamilyReportRow(n, False))
        else:
            rows.append(FamilyReportRow(n, True, target=hit[0], witness=hit[1]))
    return rows
