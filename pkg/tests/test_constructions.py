from fractions import Fraction

import pytest

from ldynamo.constructions import (
    gen_hardness_instance,
    gen_prop3_family,
    verify_reduction_claim,
)
from ldynamo.errors import DegenerateInstanceError
from ldynamo.exact import min_dynamo
from ldynamo.forest import min_dynamo_zero_degree
from ldynamo.graph import (
    Graph,
    complete_graph,
    connected_components,
    degree_sequence,
    is_forest,
    parse_graph,
    path_graph,
)

K2 = parse_graph("2 1\n0 1")


def test_prop3_smallest_member():
    g, t = gen_prop3_family(1)
    # a single vertex with one K_2 block bridged to it
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})
    assert t.values == (0, 2, 1)
    assert t.average == Fraction(1)  # (n^2+n+1)/(n+2) at n=1
    assert min_dynamo(g, t)[0] == 1


def test_prop3_second_member():
    g, t = gen_prop3_family(2)
    assert g.n == 8
    assert degree_sequence(g) == (2, 2, 2, 2, 2, 2, 3, 3)
    assert t.average == Fraction(7, 4)
    assert all(t[v] == 0 for v in range(2))
    assert all(t[v] == g.degree(v) for v in range(2, 8))
    assert min_dynamo(g, t)[0] == 4


def test_prop3_average_formula():
    for n in range(1, 5):
        _, t = gen_prop3_family(n)
        assert t.average == Fraction(n * n + n + 1, n + 2)


def test_prop3_rejects_n_zero():
    with pytest.raises(ValueError):
        gen_prop3_family(0)


def test_hardness_parameters_k2():
    inst = gen_hardness_instance(K2, 1, 1)
    assert inst.s == 18 and inst.p == 15
    # one star of 18 vertices per base vertex, plus p-1 new path vertices
    assert inst.h.n == 2 + 2 * 18 + 14
    assert inst.decision_threshold == 1 + 15 // 2 + 1


def test_hardness_parameters_triangle():
    inst = gen_hardness_instance(complete_graph(3), 1, 2)
    assert inst.s == 26 and inst.p == 21


def test_hardness_one_star_mode():
    inst = gen_hardness_instance(K2, 1, 1, mode="one-star")
    assert inst.h.n == 2 + 18 + inst.p - 1
    assert inst.path_vertices[0] == 3  # first leaf of the single star


def test_hardness_additions_are_trees():
    g = path_graph(3)
    inst = gen_hardness_instance(g, 1, 1)
    added, _ = inst.h.induced(range(g.n, inst.h.n))
    assert is_forest(added)
    # the base graph survives untouched
    assert all(e in inst.h.edges for e in g.edges)
    assert not any(
        u < g.n and v < g.n and (u, v) not in g.edges for u, v in inst.h.edges
    )


def test_hardness_thresholds_full_on_base_and_path():
    inst = gen_hardness_instance(K2, 1, 1)
    full = set(range(2)) | set(inst.path_vertices)
    for v in range(inst.h.n):
        expected = inst.h.degree(v) if v in full else 0
        assert inst.tau[v] == expected
    assert len(inst.path_vertices) == inst.p


def test_hardness_degenerate_and_bad_k():
    with pytest.raises(DegenerateInstanceError):
        gen_hardness_instance(K2, Fraction(1, 100), 1)
    with pytest.raises(DegenerateInstanceError):
        gen_hardness_instance(K2, 2, 1)
    with pytest.raises(DegenerateInstanceError):
        gen_hardness_instance(K2, 0, 1)


@pytest.mark.parametrize(
    "g,beta",
    [(K2, 1), (path_graph(3), 1), (complete_graph(3), 2)],
)
def test_verify_reduction_claim(g, beta):
    inst = gen_hardness_instance(g, 1, 1)
    report = verify_reduction_claim(inst, g, 1)
    assert report.beta_base == beta
    assert report.dyn_h == beta + inst.p // 2
    assert report.claim_holds
    assert report.within_budget


def test_reduction_dynamo_splits_over_components():
    # the full-threshold subgraph is the base graph plus a disjoint path,
    # so the dynamo size decomposes accordingly
    g = K2
    inst = gen_hardness_instance(g, 1, 1)
    from ldynamo.forest import full_threshold_subgraph

    sub, _ = full_threshold_subgraph(inst.h, inst.tau)
    comps = connected_components(sub)
    assert sorted(len(c) for c in comps) == [2, inst.p]
