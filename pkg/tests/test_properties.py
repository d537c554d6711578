"""Property tests over random units, coefficients and small graphs."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oracle_is_magic
from fuzzymagic.construct import (
    Family,
    FamilySpec,
    label_family,
    magic_coefficient,
    minimal_unit,
)
from fuzzymagic.graph import build_graph, check_sum_condition
from fuzzymagic.labels import format_label, parse_label
from fuzzymagic.serialize import from_json, to_json
from fuzzymagic.verify import EdgeBoundViolation, verify_magic

labels = st.fractions(min_value=0, max_value=1)


@given(labels)
def test_format_parse_round_trip(value):
    assert parse_label(format_label(value)) == value


@given(st.integers(min_value=1, max_value=10**9), st.integers(min_value=1, max_value=10**9))
def test_minimal_unit_monotone(a, b):
    lo, hi = sorted((a, b))
    assert minimal_unit(lo) >= minimal_unit(hi)


@given(st.integers(min_value=1, max_value=10**9))
def test_minimal_unit_is_tight(m):
    d = minimal_unit(m)
    assert m * d <= 1
    assert m * d * 10 > 1 or d == Fraction(1, 10)


family_specs = st.one_of(
    st.integers(min_value=1, max_value=60).map(lambda n: FamilySpec(Family.PATH, n)),
    st.integers(min_value=2, max_value=60).map(lambda n: FamilySpec(Family.STAR, n)),
    st.integers(min_value=1, max_value=29).map(
        lambda m: FamilySpec(Family.CYCLE, 2 * m + 1)
    ),
)


@given(family_specs)
@settings(max_examples=60)
def test_constructions_verify_and_round_trip(spec):
    lab = label_family(spec)
    report = verify_magic(lab.graph)
    assert report.verdict
    assert report.magic_constant == magic_coefficient(spec) * lab.unit <= 1
    assert check_sum_condition(lab.graph) == []
    g = from_json(to_json(lab))
    assert g.alpha == lab.graph.alpha and g.beta == lab.graph.beta


@given(
    st.lists(labels, min_size=3, max_size=3, unique=True),
    st.lists(labels, min_size=3, max_size=3),
)
@settings(max_examples=200)
def test_triangle_verdict_matches_oracle(vertex_values, edge_values):
    g = build_graph(
        list(zip((1, 2, 3), vertex_values)),
        [(1, 2, edge_values[0]), (2, 3, edge_values[1]), (1, 3, edge_values[2])],
    )
    assert verify_magic(g).verdict == oracle_is_magic(g)


@given(
    st.lists(labels, min_size=3, max_size=3, unique=True),
    st.lists(labels, min_size=3, max_size=3),
)
@settings(max_examples=100)
def test_sum_condition_edges_appear_as_bound_violations(vertex_values, edge_values):
    g = build_graph(
        list(zip((1, 2, 3), vertex_values)),
        [(1, 2, edge_values[0]), (2, 3, edge_values[1]), (1, 3, edge_values[2])],
    )
    bound = [v.edge for v in verify_magic(g).violations if isinstance(v, EdgeBoundViolation)]
    assert bound == check_sum_condition(g)
