import json
import random
from itertools import combinations
from pathlib import Path

import pytest

from binedge import (
    A,
    Q,
    FinitePoset,
    Graph,
    PosetLimits,
    PrimeIdeal,
    ResourceLimitExceeded,
    add_p_empty,
    all_labeled_graphs,
    build_poset,
    complete_graph,
    contains,
    cycle_graph,
    edgeless_graph,
    ideal_sum,
    is_prime,
    minimal_primes,
    minimal_primes_of_graph,
    open_interval,
    p_empty,
    path_graph,
    to_prime,
)
from binedge.ideals import maximal_ideal
from binedge.poset import (
    hasse_edges,
    is_meet_contractible,
    meet,
    poset_to_json,
    to_dot,
)

DATA = Path(__file__).parent / "data"
Q12 = PrimeIdeal.from_sets(5, {2, 3, 4}, [{1, 5}])


def test_path_poset_size_and_variants(p5):
    pq, pa = build_poset(p5, Q), build_poset(p5, A)
    assert len(pq) == 17
    assert set(pq.elements) == set(pa.elements)


def test_path_poset_lists_every_prime_sum(p5):
    # every prime that is a sum of minimal primes, plus the two components of the one non-prime
    mins = minimal_primes_of_graph(p5)
    sums = set()
    for k in range(1, len(mins) + 1):
        for sub in combinations(mins, k):
            s = sub[0].as_sum
            for q in sub[1:]:
                s = ideal_sum(s, q)
            sums.add(s)
    non_prime = [s for s in sums if not is_prime(s)]
    assert len(sums) == 18 and len(non_prime) == 1
    extra = set(minimal_primes(non_prime[0]))
    extra |= {add_p_empty(q, p5) for q in extra}
    expected = {to_prime(s) for s in sums if is_prime(s)} | extra
    assert expected == set(build_poset(p5, Q).elements)


def test_complete_graph_poset_is_single_element():
    for n in range(1, 6):
        p = build_poset(complete_graph(n), Q)
        assert p.elements == (p_empty(complete_graph(n)),)
        assert hasse_edges(p) == []


def test_edgeless_poset_is_zero_ideal():
    p = build_poset(edgeless_graph(3), Q)
    assert len(p) == 1 and p.elements[0].dim == 6


def test_twin_triangle_target_in_q(twin_triangles):
    p = build_poset(twin_triangles, Q, PosetLimits(max_vertices=10))
    target = PrimeIdeal.from_sets(10, {2, 3, 4, 7, 8, 9}, [{1, 5, 6, 10}])
    assert target in p
    assert len(p) == 168


def test_twin_triangle_target_reached_without_p_empty(twin_triangles):
    # two levels of re-decomposition reach the merged block with no +P_empty step
    g = twin_triangles
    prime = {q.killed_set: q for q in minimal_primes_of_graph(g)}
    first = ideal_sum(prime[frozenset({2, 7})], prime[frozenset({4, 9})])
    assert not is_prime(first)
    level1 = minimal_primes(first)
    p3 = next(q for q in level1 if q.killed_set == {2, 3, 4, 7, 9})
    p8 = next(q for q in level1 if q.killed_set == {2, 4, 7, 8, 9})
    second = ideal_sum(p3, p8)
    assert second.killed_set == {2, 3, 4, 7, 8, 9}
    # K4 on {1,5,6,10} without the edge 5-10
    assert second.edges == [(1, 5), (1, 6), (1, 10), (5, 6), (6, 10)]
    target = PrimeIdeal.from_sets(10, {2, 3, 4, 7, 8, 9}, [{1, 5, 6, 10}])
    assert target in minimal_primes(second)


def test_twin_triangle_a_variant_contains_target(twin_triangles):
    p = build_poset(twin_triangles, A, PosetLimits(max_vertices=10))
    target = PrimeIdeal.from_sets(10, {2, 3, 4, 7, 8, 9}, [{1, 5, 6, 10}])
    assert target in p


def test_maximal_elements_are_minimal_primes():
    rng = random.Random(3)
    graphs = [path_graph(5), cycle_graph(5), complete_graph(4)]
    graphs += [Graph(6, [e for e in combinations(range(1, 7), 2) if rng.random() < 0.5])
               for _ in range(10)]
    for g in graphs:
        for variant in (Q, A):
            p = build_poset(g, variant)
            assert set(p.maximal_elements()) == set(minimal_primes_of_graph(g))


@pytest.mark.parametrize("n", [3, 4])
def test_closure_and_subposet_exhaustive(n):
    for g in all_labeled_graphs(n):
        pq, pa = build_poset(g, Q), build_poset(g, A)
        assert set(pa.elements) <= set(pq.elements)
        assert all(add_p_empty(q, g) in pq for q in pq.elements)
        assert all(q.dim != 1 for q in pq.elements)


def test_order_is_reverse_inclusion(p5):
    p = build_poset(p5, Q)
    for i, a in enumerate(p.elements):
        for j, b in enumerate(p.elements):
            strict = i != j and contains(a, b)
            assert p.order.leq(i, j) == (i == j or strict)


def test_open_interval_examples(p5):
    p = build_poset(p5, Q)
    for q in minimal_primes_of_graph(p5):
        assert len(open_interval(p, q)) == 0
    assert len(open_interval(p, p_empty(p5))) == 0
    sub = open_interval(p, Q12)
    inside = {p.elements[i] for i in sub.labels}
    assert inside == {z for z in p.elements if z != Q12 and contains(Q12, z)}
    assert len(inside) == 16


def test_open_interval_of_maximal_ideal_has_meet_witness(c4):
    p = build_poset(c4, Q)
    m = maximal_ideal(4)
    if m in p:
        sub = open_interval(p, m)
        w = is_meet_contractible(sub)
        assert w is not None


def test_meet_witness_for_corner_elements():
    for g in [cycle_graph(4), cycle_graph(5), Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])]:
        p = build_poset(g, Q)
        pe = p.index[p_empty(g)]
        for q in p.elements:
            if len(q.killed_set) >= g.n - 1:
                sub = open_interval(p, q)
                local = sub.labels.index(pe)
                w = is_meet_contractible(sub, [local])
                assert w == local
                for b in range(len(sub)):
                    mt = meet(sub, local, b)
                    z = p.elements[sub.labels[mt]]
                    assert z == add_p_empty(p.elements[sub.labels[b]], g)


def test_crown_has_no_meet_witness():
    crown = FinitePoset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_meet_contractible(crown) is None


def test_meet_contractible_small_posets():
    chain = FinitePoset.from_relations(3, [(0, 1), (1, 2)])
    assert is_meet_contractible(chain) is not None
    assert len(hasse_edges(chain)) == 2
    assert is_meet_contractible(FinitePoset(())) is None
    v = FinitePoset.from_relations(3, [(0, 1), (0, 2)])
    assert is_meet_contractible(v) == 0


def test_from_relations_rejects_cycles():
    with pytest.raises(ValueError):
        FinitePoset.from_relations(2, [(0, 1), (1, 0)])


def test_path_hasse_matches_golden_file(p5):
    golden = json.loads((DATA / "p5_hasse.json").read_text())
    assert poset_to_json(build_poset(p5, Q)) == golden


def test_to_dot_is_deterministic(p5):
    a, b = to_dot(build_poset(p5, Q)), to_dot(build_poset(p5, Q))
    assert a == b
    assert a.startswith("digraph Q_G {") and a.count("->") == 32


def test_element_cap_is_loud():
    with pytest.raises(ResourceLimitExceeded) as exc:
        build_poset(cycle_graph(6), Q, PosetLimits(max_elements=10))
    assert exc.value.stats


def test_vertex_cap_is_loud(twin_triangles):
    with pytest.raises(ResourceLimitExceeded):
        build_poset(twin_triangles, Q)
