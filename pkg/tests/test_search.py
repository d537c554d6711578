from fractions import Fraction

import pytest

from conftest import naive_enumerate
from fuzzymagic.construct import label_cycle, label_path, label_star, magic_coefficient, FamilySpec, Family
from fuzzymagic.search import (
    GraphStructure,
    Infeasible,
    SearchSpec,
    TargetTooLarge,
    cycle_structure,
    default_unit,
    enumerate_magic,
    explore_family,
    minimal_magic_coefficient,
    path_structure,
    star_structure,
)


def fr(text):
    return Fraction(text)


def assignment_vectors(structure, result):
    return {s.key(structure) for s in result.solutions}


class TestStructures:
    def test_path(self):
        s = path_structure(2)
        assert s.vertices == (1, 2, 3)
        assert s.edges == ((1, 2), (2, 3))

    def test_star(self):
        s = star_structure(3)
        assert s.vertices == (0, 1, 2, 3)
        assert s.edges == ((0, 1), (0, 2), (0, 3))

    def test_cycle(self):
        s = cycle_structure(3)
        assert set(s.edges) == {(1, 2), (2, 3), (1, 3)}

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            GraphStructure((1,), ((1, 1),))


class TestEnumerate:
    def test_single_edge_exhaustive(self):
        structure = path_structure(1)
        result = enumerate_magic(
            structure, SearchSpec(max_coefficient=3, target=6, unit=fr("0.1"))
        )
        assert result.exhausted
        # all four placements of {1,2,3} keeping the edge below its endpoint sum
        assert assignment_vectors(structure, result) == {
            (1, 3, 2),
            (2, 3, 1),
            (3, 1, 2),
            (3, 2, 1),
        }

    def test_single_edge_infeasible_target(self):
        result = enumerate_magic(
            path_structure(1), SearchSpec(max_coefficient=3, target=7, unit=fr("0.1"))
        )
        assert result.solutions == ()
        assert result.exhausted

    def test_triangle_contains_constructed_solution(self):
        result = enumerate_magic(
            cycle_structure(3),
            SearchSpec(max_coefficient=6, target=12, unit=fr("0.01")),
        )
        constructed = label_cycle(3)
        keys = assignment_vectors(cycle_structure(3), result)
        assert (5, 6, 4, 1, 3, 2) in keys  # v1..v3 then edges (1,2),(1,3),(2,3)

        witness = next(
            s
            for s in result.solutions
            if s.vertex_coefficients == constructed.vertex_coefficients
        )
        assert witness.edge_coefficients == constructed.edge_coefficients

    def test_infeasible_by_pigeonhole(self):
        with pytest.raises(Infeasible):
            enumerate_magic(path_structure(2), SearchSpec(max_coefficient=4))

    def test_edgeless_rejected(self):
        with pytest.raises(Infeasible):
            enumerate_magic(GraphStructure((1, 2), ()), SearchSpec(max_coefficient=5))

    def test_target_too_large(self):
        with pytest.raises(TargetTooLarge):
            enumerate_magic(
                path_structure(1),
                SearchSpec(max_coefficient=3, target=11, unit=fr("0.1")),
            )

    def test_limit_truncates(self):
        result = enumerate_magic(
            path_structure(1),
            SearchSpec(max_coefficient=3, target=6, unit=fr("0.1"), limit=2),
        )
        assert len(result.solutions) == 2
        assert not result.exhausted

    def test_deterministic(self):
        spec = SearchSpec(max_coefficient=7, target=13, unit=fr("0.01"))
        a = enumerate_magic(path_structure(3), spec)
        b = enumerate_magic(path_structure(3), spec)
        assert a == b

    def test_untargeted_covers_all_targets(self):
        structure = path_structure(1)
        free = enumerate_magic(structure, SearchSpec(max_coefficient=3, unit=fr("0.1")))
        per_target = set()
        for t in range(6, 11):
            r = enumerate_magic(
                structure, SearchSpec(max_coefficient=3, target=t, unit=fr("0.1"))
            )
            per_target |= {(s.target, s.key(structure)) for s in r.solutions}
        assert {(s.target, s.key(structure)) for s in free.solutions} == per_target


@pytest.mark.parametrize(
    "structure,n",
    [
        (path_structure(1), 1),
        (path_structure(2), 2),
        (path_structure(3), 3),
        (cycle_structure(3), 3),
        (star_structure(2), 2),
    ],
)
def test_pruned_equals_naive(structure, n):
    K = 2 * n + 1
    unit = fr("0.01")
    for target in range(6, 3 * K - 2):
        if target * unit > 1:
            continue
        result = enumerate_magic(
            structure, SearchSpec(max_coefficient=K, target=target, unit=unit)
        )
        assert result.exhausted
        assert assignment_vectors(structure, result) == naive_enumerate(
            structure, K, target, unit
        )


class TestMinimalCoefficient:
    def test_single_edge(self):
        hit = minimal_magic_coefficient(path_structure(1), 3, fr("0.1"))
        assert hit is not None and hit[0] == 6

    def test_star_beats_construction(self):
        # the closed-form star labeling has T = 9; the grid admits T = 8
        hit = minimal_magic_coefficient(star_structure(2), 5, fr("0.1"))
        assert hit is not None
        target, witness = hit
        assert target == 8
        assert witness.vertex_coefficients[0] == 1  # small center is the trick

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            minimal_magic_coefficient(path_structure(3), 4, fr("0.1"))

    def test_none_when_unit_blocks_everything(self):
        # K large enough, but floor(1/d) < smallest feasible T
        assert minimal_magic_coefficient(path_structure(1), 5, fr("0.2")) is None


class TestExploreFamily:
    def test_odd_cycles_found(self):
        rows = explore_family(
            ((n, cycle_structure(n)) for n in (3, 5)),
            max_coefficient=lambda n: 2 * n,
            unit=fr("0.01"),
        )
        for row, n in zip(rows, (3, 5)):
            assert row.found
            assert row.target is not None
            assert row.target <= magic_coefficient(FamilySpec(Family.CYCLE, n))

    def test_even_cycle_row_recorded(self):
        rows = explore_family([(4, cycle_structure(4))], max_coefficient=8, unit=fr("0.01"))
        (row,) = rows
        assert row.error is None
        assert isinstance(row.found, bool)

    def test_path_n2_found(self):
        rows = explore_family([(2, path_structure(2))], max_coefficient=5, unit=fr("0.1"))
        assert rows[0].found

    def test_error_propagated_per_row(self):
        rows = explore_family(
            [(1, path_structure(1)), (3, path_structure(3))],
            max_coefficient=3,
            unit=fr("0.1"),
        )
        assert rows[0].found
        assert rows[1].error is not None


def test_default_unit_allows_max_target():
    for K in (3, 5, 10, 40):
        d = default_unit(K)
        assert (3 * K - 3) * d <= 1
        assert d.denominator <= 10 * (3 * K - 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_constructor_found_for_paths(n):
    lab = label_path(n)
    structure = path_structure(n)
    result = enumerate_magic(
        structure,
        SearchSpec(max_coefficient=2 * n + 1, target=lab.magic_coefficient, unit=lab.unit),
    )
    keys = assignment_vectors(structure, result)
    constructed_key = tuple(lab.vertex_coefficients[v] for v in structure.vertices) + tuple(
        lab.edge_coefficients[e] for e in sorted(structure.edges)
    )
    assert constructed_key in keys


def test_constructor_found_for_star():
    lab = label_star(2)
    structure = star_structure(2)
    result = enumerate_magic(
        structure,
        SearchSpec(max_coefficient=5, target=lab.magic_coefficient, unit=lab.unit),
    )
    keys = assignment_vectors(structure, result)
    key = tuple(lab.vertex_coefficients[v] for v in structure.vertices) + tuple(
        lab.edge_coefficients[e] for e in sorted(structure.edges)
    )
    assert key in keys
