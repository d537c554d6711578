"""Fuzzy graph data model and the basic structural checks.

A fuzzy graph carries a membership value on every vertex (alpha) and every
edge (beta).  Edges are unordered pairs stored as sorted (u, v) tuples, so
symmetry of the edge relation is structural rather than checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .labels import Label, as_label

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base for graph construction failures."""


class DuplicateVertex(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} declared twice")


class DuplicateEdge(GraphError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} declared twice")


class SelfLoop(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class UnknownEndpoint(GraphError):
    def __init__(self, vertex, edge):
        self.vertex = vertex
        self.edge = edge
        super().__init__(f"edge {edge} references undeclared vertex {vertex}")


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FuzzyGraph:
    """Immutable vertex/edge sets with their membership maps.

    Construct through :func:`build_graph`; direct construction skips
    validation.  Instances are safe to share between threads.
    """

    vertices: tuple[int, ...]
    alpha: dict[int, Fraction]
    edges: tuple[Edge, ...]
    beta: dict[Edge, Fraction]

    def edge_label(self, u: int, v: int) -> Fraction:
        return self.beta[canonical_edge(u, v)]

    def incident_edges(self, v: int) -> list[Edge]:
        return [e for e in self.edges if v in e]


def build_graph(
    vertex_labels: Iterable[tuple[int, Label]],
    edge_labels: Iterable[tuple[int, int, Label]],
) -> FuzzyGraph:
    """Validate and assemble a FuzzyGraph.

    Raises DuplicateVertex, DuplicateEdge, SelfLoop, UnknownEndpoint or
    LabelOutOfRange, each naming the offending item.
    """
    alpha: dict[int, Fraction] = {}
    order: list[int] = []
    for v, a in vertex_labels:
        if v in alpha:
            raise DuplicateVertex(v)
        alpha[v] = as_label(a, holder=f"vertex {v}")
        order.append(v)

    beta: dict[Edge, Fraction] = {}
    edge_order: list[Edge] = []
    for u, v, b in edge_labels:
        if u == v:
            raise SelfLoop(u)
        for endpoint in (u, v):
            if endpoint not in alpha:
                raise UnknownEndpoint(endpoint, (u, v))
        e = canonical_edge(u, v)
        if e in beta:
            raise DuplicateEdge(e)
        beta[e] = as_label(b, holder=f"edge {e}")
        edge_order.append(e)

    return FuzzyGraph(tuple(order), alpha, tuple(edge_order), beta)


def crisp_order_size(g: FuzzyGraph) -> tuple[int, int]:
    """(|V|, |E|) of the underlying crisp graph."""
    return len(g.vertices), len(g.edges)


@dataclass(frozen=True)
class DegreeSummary:
    """Per-vertex degree sums; sums may exceed 1, so these are plain
    rationals rather than membership values."""

    degrees: dict[int, Fraction]
    min_degree: Fraction
    max_degree: Fraction


def degrees(g: FuzzyGraph) -> DegreeSummary:
    """Degree of u = sum of beta over edges incident to u."""
    deg = {v: Fraction(0) for v in g.vertices}
    for (u, v), b in g.beta.items():
        deg[u] += b
        deg[v] += b
    values = deg.values() or [Fraction(0)]
    lo = min(values, default=Fraction(0))
    hi = max(values, default=Fraction(0))
    return DegreeSummary(deg, lo, hi)


def check_product_condition(g: FuzzyGraph) -> list[Edge]:
    """Edges violating beta(uv) < alpha(u) * alpha(v), sorted by endpoints.

    An empty list means the labeling meets the product-form compatibility
    bound.  The magic constructions deliberately do not: they satisfy the
    sum-form bound instead (see check_sum_condition).
    """
    return sorted(e for e in g.edges if g.beta[e] >= g.alpha[e[0]] * g.alpha[e[1]])


def check_sum_condition(g: FuzzyGraph) -> list[Edge]:
    """Edges violating the strict bound beta(uv) < alpha(u) + alpha(v)."""
    return sorted(e for e in g.edges if g.beta[e] >= g.alpha[e[0]] + g.alpha[e[1]])


@dataclass(frozen=True)
class DistinctnessReport:
    """Result of the all-labels-distinct check.

    `duplicates` maps each repeated value to the sorted list of holders,
    where a holder is ("vertex", id) or ("edge", (u, v)).  Vertex and edge
    labels share one pool: a vertex label equal to an edge label counts.
    """

    ok: bool
    duplicates: dict[Fraction, list[tuple]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def is_fuzzy_labeling(g: FuzzyGraph) -> DistinctnessReport:
    """True iff all vertex and edge labels are pairwise distinct."""
    holders: dict[Fraction, list[tuple]] = {}
    for v in g.vertices:
        holders.setdefault(g.alpha[v], []).append(("vertex", v))
    for e in g.edges:
        holders.setdefault(g.beta[e], []).append(("edge", e))
    duplicates = {
        value: sorted(who, key=repr)
        for value, who in sorted(holders.items())
        if len(who) > 1
    }
    return DistinctnessReport(not duplicates, duplicates)
