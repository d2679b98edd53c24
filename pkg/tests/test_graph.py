import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from ldynamo.errors import (
    DuplicateEdgeError,
    MalformedLineError,
    OddCycleError,
    SelfLoopError,
    VertexRangeError,
)
from ldynamo.graph import (
    Graph,
    bipartition,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_sequence,
    edge_density,
    is_forest,
    parse_graph,
    path_graph,
    serialize_graph,
    star_graph,
)


def test_parse_k2():
    g = parse_graph("2 1\n0 1")
    assert g.n == 2 and g.edges == frozenset({(0, 1)})


def test_parse_isolated_vertices():
    g = parse_graph("3 0")
    assert g.n == 3 and g.m == 0


def test_parse_p4():
    g = parse_graph("4 3\n0 1\n1 2\n2 3")
    assert g == path_graph(4)


@pytest.mark.parametrize(
    "text,exc",
    [
        ("", MalformedLineError),
        ("2", MalformedLineError),
        ("2 1\n0 1 2", MalformedLineError),
        ("2 2\n0 1", MalformedLineError),
        ("2 1\n0 x", MalformedLineError),
        ("2 1\n0 2", VertexRangeError),
        ("2 1\n1 1", SelfLoopError),
        ("3 2\n0 1\n1 0", DuplicateEdgeError),
    ],
)
def test_parse_errors_are_distinct(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


@given(
    st.integers(min_value=1, max_value=9).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] < e[1]
                )
            ),
        )
    )
)
def test_serialize_roundtrip(data):
    n, edges = data
    g = Graph(n, frozenset(edges))
    assert parse_graph(serialize_graph(g)) == g


def test_degree_sequence_examples():
    assert degree_sequence(parse_graph("2 1\n0 1")) == (1, 1)
    assert degree_sequence(star_graph(3)) == (1, 1, 1, 3)


def test_edge_density_exact():
    assert edge_density(parse_graph("2 1\n0 1")) == Fraction(1, 2)
    assert edge_density(cycle_graph(4)) == 1
    assert edge_density(path_graph(4)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        edge_density(Graph(0, frozenset()))


def test_density_times_n_is_m(graphs_to_5):
    for g in graphs_to_5:
        assert edge_density(g) * g.n == g.m


def test_bipartition_p4():
    left, right = bipartition(path_graph(4))
    assert {frozenset(left), frozenset(right)} == {
        frozenset({0, 2}),
        frozenset({1, 3}),
    }


def test_bipartition_triangle_witness():
    with pytest.raises(OddCycleError) as info:
        bipartition(complete_graph(3))
    cycle = info.value.cycle
    assert len(cycle) == 3 and len(set(cycle)) == 3


def test_bipartition_two_edge_forest():
    g = parse_graph("4 2\n0 1\n2 3")
    left, right = bipartition(g)
    for u, v in g.edges:
        assert (u in left) != (v in left)


def test_odd_cycle_witness_is_a_cycle(graphs_to_5):
    for g in graphs_to_5:
        try:
            left, right = bipartition(g)
        except OddCycleError as exc:
            cycle = exc.cycle
            assert len(cycle) % 2 == 1
            assert all(
                g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)])
                for i in range(len(cycle))
            )
        else:
            assert all((u in left) != (v in left) for u, v in g.edges)


def test_is_forest():
    assert is_forest(path_graph(4))
    assert not is_forest(cycle_graph(4))
    assert is_forest(Graph(5, frozenset()))


def test_forest_iff_edge_count(graphs_to_5):
    for g in graphs_to_5:
        assert is_forest(g) == (g.m == g.n - len(connected_components(g)))


def test_self_loop_rejected_by_constructor():
    with pytest.raises(SelfLoopError):
        Graph(2, frozenset({(1, 1)}))
