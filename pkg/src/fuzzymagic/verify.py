"""Decision procedure for the magic-labeling axioms.

verify_magic checks an arbitrary fuzzy graph against the definition:
injective vertex labels, injective edge labels, every edge's membership
strictly below the sum of its endpoints', all vertex-edge-vertex sums equal,
and that common sum at most 1.  All violations are collected (never
short-circuited) so callers can assert exact violation sets, and reports
are deterministic: violations sort by kind, then by the ids involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Edge, FuzzyGraph, is_fuzzy_labeling


@dataclass(frozen=True)
class Violation:
    pass


@dataclass(frozen=True)
class NotInjectiveVertexLabels(Violation):
    value: Fraction
    holders: tuple[int, ...]


@dataclass(frozen=True)
class NotInjectiveEdgeLabels(Violation):
    value: Fraction
    holders: tuple[Edge, ...]


@dataclass(frozen=True)
class EdgeBoundViolation(Violation):
    """beta(uv) >= alpha(u) + alpha(v); the bound is strict."""

    edge: Edge
    beta: Fraction
    alpha_sum: Fraction


@dataclass(frozen=True)
class NonConstantSum(Violation):
    """This edge's sum differs from the reference sum, which is taken on
    the lexicographically smallest edge (a fixed convention for stable
    reports)."""

    edge: Edge
    sum: Fraction
    reference_sum: Fraction


@dataclass(frozen=True)
class ConstantExceedsOne(Violation):
    constant: Fraction


@dataclass(frozen=True)
class NoEdges(Violation):
    """Magicness quantifies over edges; an edgeless graph is not magic."""


_KIND_ORDER = {
    NotInjectiveVertexLabels: 0,
    NotInjectiveEdgeLabels: 1,
    EdgeBoundViolation: 2,
    NonConstantSum: 3,
    ConstantExceedsOne: 4,
    NoEdges: 5,
}


@dataclass(frozen=True)
class VerificationReport:
    verdict: bool
    magic_constant: Fraction | None
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.verdict


class NotMagic(ValueError):
    def __init__(self, report: VerificationReport):
        self.report = report
        names = ", ".join(type(v).__name__ for v in report.violations)
        super().__init__(f"graph is not fuzzy magic: {names}")


def _sort_key(violation: Violation):
    fields = tuple(
        repr(getattr(violation, f)) for f in violation.__dataclass_fields__
    )
    return (_KIND_ORDER[type(violation)], fields)


def verify_magic(g: FuzzyGraph) -> VerificationReport:
    """Check every magic-graph axiom and report all failures.

    All labels are first rescaled to one common denominator so that every
    comparison below is plain integer arithmetic; the rescaling is exact.
    """
    violations: list[Violation] = []

    scale = math.lcm(
        *(f.denominator for f in g.alpha.values()),
        *(f.denominator for f in g.beta.values()),
    )
    a = {v: f.numerator * (scale // f.denominator) for v, f in g.alpha.items()}
    b = {e: f.numerator * (scale // f.denominator) for e, f in g.beta.items()}

    by_alpha: dict[int, list[int]] = {}
    for v in g.vertices:
        by_alpha.setdefault(a[v], []).append(v)
    for value, holders in by_alpha.items():
        if len(holders) > 1:
            violations.append(
                NotInjectiveVertexLabels(Fraction(value, scale), tuple(sorted(holders)))
            )

    by_beta: dict[int, list[Edge]] = {}
    for e in g.edges:
        by_beta.setdefault(b[e], []).append(e)
    for value, holders in by_beta.items():
        if len(holders) > 1:
            violations.append(
                NotInjectiveEdgeLabels(Fraction(value, scale), tuple(sorted(holders)))
            )

    ordered = sorted(g.edges)
    for e in ordered:
        bound = a[e[0]] + a[e[1]]
        if b[e] >= bound:
            violations.append(
                EdgeBoundViolation(e, g.beta[e], Fraction(bound, scale))
            )

    constant = None
    if not ordered:
        violations.append(NoEdges())
    else:
        reference = ordered[0]
        ref_total = a[reference[0]] + b[reference] + a[reference[1]]
        constant = Fraction(ref_total, scale)
        for e in ordered[1:]:
            total = a[e[0]] + b[e] + a[e[1]]
            if total != ref_total:
                violations.append(NonConstantSum(e, Fraction(total, scale), constant))
        if ref_total > scale:
            violations.append(ConstantExceedsOne(constant))

    violations.sort(key=_sort_key)
    verdict = not violations
    return VerificationReport(verdict, constant if verdict else None, tuple(violations))


def magic_constant_of(g: FuzzyGraph) -> Fraction:
    """The common edge sum m(G); raises NotMagic if verification fails."""
    report = verify_magic(g)
    if not report.verdict:
        raise NotMagic(report)
    return report.magic_constant


def is_fuzzy_magic_and_labeling(g: FuzzyGraph) -> bool:
    """Magic axioms plus distinctness across the combined vertex+edge
    label pool (the magic axioms alone allow a vertex label to equal an
    edge label)."""
    return bool(verify_magic(g)) and bool(is_fuzzy_labeling(g))
