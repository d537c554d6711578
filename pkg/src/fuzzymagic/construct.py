"""Closed-form magic labelings for paths, stars and odd cycles.

Every construction assigns integer coefficients on a grid of step d (the
"unit"): edges get {1..n} and vertices get {n+1..2n+1} (path, star) or
{n+1..2n} (cycle).  Each edge's vertex-edge-vertex coefficient sum is the
same integer M, so the labeling is magic with constant M*d.  The default
unit is the coarsest power of ten keeping M*d <= 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Edge, FuzzyGraph, build_graph
from .labels import Label, as_label


class Family(enum.Enum):
    PATH = "path"
    STAR = "star"
    CYCLE = "cycle"


class InvalidFamilySpec(ValueError):
    pass


class InvalidN(InvalidFamilySpec):
    def __init__(self, family, n, why):
        self.family = family
        self.n = n
        super().__init__(f"{family.value} n={n}: {why}")


class UnitTooLarge(ValueError):
    def __init__(self, coefficient, unit):
        self.coefficient = coefficient
        self.unit = unit
        super().__init__(
            f"magic constant {coefficient}*{unit} = {coefficient * unit} exceeds 1"
        )


class TableGap(LookupError):
    """n falls between rows of the published unit table for its family."""

    def __init__(self, family, n):
        self.family = family
        self.n = n
        super().__init__(f"published unit table has no row for {family.value} n={n}")


@dataclass(frozen=True)
class FamilySpec:
    """A graph family instance: path length / leaf count / cycle length n."""

    family: Family
    n: int

    def __post_init__(self):
        n = self.n
        if self.family is Family.PATH and n < 1:
            raise InvalidN(self.family, n, "need n >= 1")
        if self.family is Family.STAR and n < 2:
            raise InvalidN(self.family, n, "need n >= 2")
        if self.family is Family.CYCLE and (n < 3 or n % 2 == 0):
            raise InvalidN(self.family, n, "need odd n >= 3")


@dataclass(frozen=True)
class MagicLabeling:
    """A constructed labeling with its integer-coefficient view.

    Every label equals coefficient * unit exactly, and every edge sum
    equals magic_coefficient * unit = magic_constant.
    """

    graph: FuzzyGraph
    unit: Fraction
    magic_coefficient: int
    vertex_coefficients: dict[int, int]
    edge_coefficients: dict[Edge, int]

    @property
    def magic_constant(self) -> Fraction:
        return self.magic_coefficient * self.unit


def magic_coefficient(spec: FamilySpec) -> int:
    """The integer M with magic constant M*d for this family and n."""
    n = spec.n
    if spec.family is Family.STAR:
        return 3 * (n + 1)
    if spec.family is Family.PATH:
        return (7 * n + 5) // 2 if n % 2 else (7 * n + 4) // 2
    return (7 * n + 3) // 2  # odd cycle


def minimal_unit(coefficient: int) -> Fraction:
    """Coarsest d = 10^-k (k >= 1) with coefficient * d <= 1."""
    if coefficient < 1:
        raise ValueError(f"coefficient must be >= 1, got {coefficient}")
    k = 1
    power = 10
    while power < coefficient:
        power *= 10
        k += 1
    return Fraction(1, power)


def paper_unit(spec: FamilySpec) -> tuple[Fraction, bool]:
    """The unit from the published per-family tables, with a deviation flag.

    Returns (d, deviates) where `deviates` is True whenever the table's d
    differs from minimal_unit at this n (the published cycle table forces a
    magic constant above 1 from n = 287 on).  Raises TableGap for n the
    table skips, e.g. the star table covers neither n = 3 nor 28..32.
    """
    n = spec.n
    d = _table_unit(spec.family, n)
    if d is None:
        raise TableGap(spec.family, n)
    return d, d != minimal_unit(magic_coefficient(spec))


def _table_unit(family: Family, n: int):
    if family is Family.PATH:
        if n % 2:
            if n == 1:
                return Fraction(1, 10)
            if 3 <= n <= 27:
                return Fraction(1, 100)
            if 29 <= n <= 285:
                return Fraction(1, 1000)
            return _open_range_unit(n, 285)
        if n == 2:
            return Fraction(1, 10)
        if 4 <= n <= 28:
            return Fraction(1, 100)
        if 30 <= n <= 284:
            return Fraction(1, 1000)
        return _open_range_unit(n, 284)
    if family is Family.STAR:
        if n == 2:
            return Fraction(1, 10)
        if 3 < n <= 9:
            return Fraction(1, 100)
        digits = len(str(n))
        if digits >= 2:
            low = sum(3 * (10**j - 1) for j in range(digits))
            high = sum(3 * 10**j for j in range(digits))
            if 10 ** (digits - 1) <= n <= low:
                return Fraction(1, 10**digits)
            if high <= n <= 10**digits - 1:
                return Fraction(1, 10 ** (digits + 1))
        return None
    # odd cycle
    if 3 <= n <= 27:
        return Fraction(1, 100)
    if 29 <= n <= 287:
        return Fraction(1, 1000)
    if 289 <= n <= 2849:
        return Fraction(1, 1000)
    i = 1
    while True:
        lo = 285 * 10**i + 1
        hi = 285 * 10 ** (i + 1) - 1
        if lo < n < hi:
            return Fraction(1, 10 ** (i + 4))
        if n <= hi:
            return None
        i += 1


def _open_range_unit(n: int, base: int):
    # rows "base*10^i < n < base*10^(i+1) -> 10^-(i+4)", strict on both ends
    i = 0
    while True:
        lo, hi = base * 10**i, base * 10 ** (i + 1)
        if lo < n < hi:
            return Fraction(1, 10 ** (i + 4))
        if n <= hi:
            return None
        i += 1


def _resolve_unit(spec: FamilySpec, unit) -> Fraction:
    coeff = magic_coefficient(spec)
    if unit is None:
        return minimal_unit(coeff)
    unit = as_label(unit)
    if unit <= 0:
        raise ValueError("unit must be positive")
    if coeff * unit > 1:
        raise UnitTooLarge(coeff, unit)
    return unit


def _assemble(spec, unit, vertex_coeffs, edge_coeffs) -> MagicLabeling:
    d = _resolve_unit(spec, unit)
    graph = build_graph(
        [(v, c * d) for v, c in vertex_coeffs.items()],
        [(u, v, c * d) for (u, v), c in edge_coeffs.items()],
    )
    return MagicLabeling(graph, d, magic_coefficient(spec), dict(vertex_coeffs), dict(edge_coeffs))


def label_path(n: int, unit: Label | None = None) -> MagicLabeling:
    """Magic labeling of the path on vertices 1..n+1 (n edges).

    Edge j,j+1 gets coefficient j.  Odd vertices v_{2i-1} count down from
    2n+1; even vertices v_{2i} count down from just below the ceiling
    B = (3n+3)//2 (odd n) or (3n+2)//2 (even n).  Together the vertex
    coefficients are exactly {n+1..2n+1}.
    """
    spec = FamilySpec(Family.PATH, n)
    even_base = (3 * n + 3) // 2 if n % 2 else (3 * n + 2) // 2
    vertex_coeffs: dict[int, int] = {}
    for v in range(1, n + 2):
        if v % 2:
            i = (v + 1) // 2
            vertex_coeffs[v] = 2 * n + 2 - i
        else:
            i = v // 2
            vertex_coeffs[v] = even_base - i
    edge_coeffs = {(j, j + 1): j for j in range(1, n + 1)}
    return _assemble(spec, unit, vertex_coeffs, edge_coeffs)


def label_star(n: int, unit: Label | None = None) -> MagicLabeling:
    """Magic labeling of the star with center 0 and leaves 1..n.

    Center gets n+1, leaf i gets n+1+i, spoke i gets n+1-i; every spoke
    sums to 3(n+1).
    """
    spec = FamilySpec(Family.STAR, n)
    vertex_coeffs = {0: n + 1}
    edge_coeffs = {}
    for i in range(1, n + 1):
        vertex_coeffs[i] = n + 1 + i
        edge_coeffs[(0, i)] = n + 1 - i
    return _assemble(spec, unit, vertex_coeffs, edge_coeffs)


def label_cycle(n: int, unit: Label | None = None) -> MagicLabeling:
    """Magic labeling of the odd cycle on vertices 1..n.

    Edges are labeled first: edge (i, i+1) gets i and the closing edge
    (n, 1) gets n.  Vertices interleave two descending runs so that the
    coefficients are exactly {n+1..2n} and every edge sum is (7n+3)/2.
    """
    spec = FamilySpec(Family.CYCLE, n)
    vertex_coeffs: dict[int, int] = {}
    for i in range(1, (n + 1) // 2 + 1):
        vertex_coeffs[n + 2 - 2 * i] = n + i
    for i in range(1, (n - 1) // 2 + 1):
        vertex_coeffs[n + 1 - 2 * i] = (3 * n + 1) // 2 + i
    edge_coeffs = {(i, i + 1): i for i in range(1, n)}
    edge_coeffs[(1, n)] = n
    return _assemble(spec, unit, vertex_coeffs, edge_coeffs)


_CONSTRUCTORS = {
    Family.PATH: label_path,
    Family.STAR: label_star,
    Family.CYCLE: label_cycle,
}


def label_family(spec: FamilySpec, unit: Label | None = None) -> MagicLabeling:
    return _CONSTRUCTORS[spec.family](spec.n, unit)
