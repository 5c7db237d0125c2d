import pytest

from binedge import (
    Graph,
    all_labeled_graphs,
    bn_upper_bound,
    bounds_report,
    check_depth4_characterization,
    complete_bipartite,
    complete_graph,
    component_lower_bound,
    cycle_graph,
    depth,
    disjoint_union,
    edgeless_graph,
    faltings_lower_bound,
    family_oracle,
    path_graph,
)
from binedge.bounds import bigheight, inequality_chain
from binedge.graphcore import is_connected


def test_component_lower_bound_examples(c4, p5, k25):
    assert component_lower_bound(c4) == 4
    assert component_lower_bound(p5) == 4
    assert component_lower_bound(disjoint_union(complete_graph(3), Graph(1))) == 6
    assert component_lower_bound(k25) == 4 == depth(k25)
    assert component_lower_bound(disjoint_union(c4, complete_graph(2))) == 4 + 3


def test_faltings_bound_examples(c4):
    assert bigheight(c4) == 4
    assert faltings_lower_bound(c4) == 1
    for n in range(2, 7):
        assert faltings_lower_bound(complete_graph(n)) == (2 * n - 1) // (n - 1)
    assert faltings_lower_bound(edgeless_graph(4)) is None


def test_connectivity_upper_bound_examples(c4, p5):
    assert bn_upper_bound(c4) == 4 == depth(c4)
    assert bn_upper_bound(p5) == 6 == depth(p5)
    assert bn_upper_bound(complete_graph(4)) is None
    assert bn_upper_bound(disjoint_union(c4, c4)) is None


def test_depth4_characterization_examples(c4, k25, p5):
    v = check_depth4_characterization(c4, depth(c4))
    assert v.passed and v.witness == (1, 3)
    assert check_depth4_characterization(k25, 4).passed
    v = check_depth4_characterization(p5, depth(p5))
    assert v.passed and v.witness is None
    assert not check_depth4_characterization(p5, 4).passed
    with pytest.raises(ValueError):
        check_depth4_characterization(path_graph(3), 4)


def test_family_oracle_examples():
    assert family_oracle(cycle_graph(6)) == ("cycle", 6)
    assert family_oracle(path_graph(7)) == ("block", 8)
    star = Graph(5, [(1, v) for v in range(2, 6)])
    assert family_oracle(star) == ("block", 6)
    assert family_oracle(complete_graph(4)) == ("block", 5)
    assert family_oracle(complete_bipartite(2, 3)) is None
    assert family_oracle(disjoint_union(path_graph(2), path_graph(2))) is None


def _trees(n):
    return [g for g in all_labeled_graphs(n) if g.num_edges() == n - 1 and is_connected(g)]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_family_oracle_agrees_with_engine_on_cycles(n):
    assert depth(cycle_graph(n)) == family_oracle(cycle_graph(n))[1]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_family_oracle_agrees_with_engine_on_trees(n):
    for t in _trees(n):
        assert depth(t) == n + 1 == family_oracle(t)[1]


def test_inequality_chain():
    for g in (cycle_graph(5), disjoint_union(cycle_graph(4), complete_graph(3)),
              disjoint_union(path_graph(3), Graph(1))):
        chain = inequality_chain(g)
        assert all(a <= b for a, b in zip(chain, chain[1:]))
    assert inequality_chain(disjoint_union(complete_graph(3), Graph(2))) is None


def test_report_rendering(c4):
    rep = bounds_report(c4)
    j = rep.to_json()
    assert j["bn_upper"] == 4 and j["join2k1"] == [1, 3] and j["family_oracle"] == {"family": "cycle", "depth": 4}
    assert "connectivity upper bound: 4" in rep.render()


def test_bn_bound_is_at_least_four_for_connected_graphs():
    for g in all_labeled_graphs(5):
        b = bn_upper_bound(g)
        if b is not None:
            assert b >= 4
