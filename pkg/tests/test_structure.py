import random
from itertools import combinations

import pytest

from conftest import K3_CORNERS, P3_CORNERS, random_graph
from trapgraph import (
    Bipartition,
    CaterpillarDecomposition,
    CaterpillarRefusal,
    IntersectionGraph,
    OddCycle,
    caterpillar_to_diagram,
    has_triangle,
    intersection_graph,
    is_bipartite,
    is_caterpillar,
    random_caterpillar,
    random_diagram,
    validate,
)
from trapgraph.oracle import connected_components, has_odd_cycle


def spider(legs=3, length=2):
    """Center 1 with `legs` paths of `length` edges hanging off it."""
    edges = []
    nxt = 2
    for _ in range(legs):
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return IntersectionGraph.from_edges(nxt - 1, edges)


def path_graph(n):
    return IntersectionGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def check_odd_cycle(g, witness):
    cycle = witness.vertices
    assert len(cycle) % 2 == 1
    assert len(set(cycle)) == len(cycle)
    for k in range(len(cycle)):
        assert g.has_edge(cycle[k], cycle[(k + 1) % len(cycle)])


def check_decomposition(g, cd):
    assert sorted(cd.spine) + sorted(v for p in cd.pendants for v in p) != []
    seen = sorted(list(cd.spine) + [v for p in cd.pendants for v in p])
    assert seen == list(g.vertices())
    for k in range(len(cd.spine) - 1):
        assert g.has_edge(cd.spine[k], cd.spine[k + 1])
    for k, leaves in enumerate(cd.pendants):
        for leaf in leaves:
            assert g.has_edge(cd.spine[k], leaf)
            assert g.degree(leaf) == 1


def test_bipartite_p3():
    verdict = is_bipartite(intersection_graph(validate(**P3_CORNERS)))
    assert isinstance(verdict, Bipartition)
    zero, one = verdict.parts()
    assert {tuple(zero), tuple(one)} == {(1, 3), (2,)}


def test_bipartite_k3_returns_triangle_cycle():
    g = intersection_graph(validate(**K3_CORNERS))
    verdict = is_bipartite(g)
    assert isinstance(verdict, OddCycle)
    assert len(verdict.vertices) == 3
    check_odd_cycle(g, verdict)


def test_bipartite_matches_cycle_oracle():
    rng = random.Random(60)
    for _ in range(150):
        dg = random_diagram(rng.randint(1, 8), rng.randrange(1 << 30))
        g = intersection_graph(dg)
        verdict = is_bipartite(g)
        if isinstance(verdict, Bipartition):
            assert not has_odd_cycle(g)
            for u, v in g.edges():
                assert verdict.side[u] != verdict.side[v]
        else:
            assert has_odd_cycle(g)
            check_odd_cycle(g, verdict)


def test_bipartite_on_general_graphs():
    rng = random.Random(61)
    for _ in range(150):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        verdict = is_bipartite(g)
        assert isinstance(verdict, Bipartition) == (not has_odd_cycle(g))
        if isinstance(verdict, OddCycle):
            check_odd_cycle(g, verdict)


def test_has_triangle_examples():
    assert has_triangle(intersection_graph(validate(**K3_CORNERS))) == (1, 2, 3)
    assert has_triangle(path_graph(6)) is None
    assert has_triangle(spider()) is None


def test_has_triangle_matches_triple_scan():
    rng = random.Random(62)
    for _ in range(80):
        g = random_graph(rng.randint(1, 25), rng.random() * 0.5, rng)
        brute = None
        for i, j, k in combinations(g.vertices(), 3):
            if g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k):
                brute = (i, j, k)
                break
        found = has_triangle(g)
        assert (found is None) == (brute is None)
        if found:
            i, j, k = found
            assert g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k)


def test_caterpillar_star():
    star = IntersectionGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    cd = is_caterpillar(star)
    assert isinstance(cd, CaterpillarDecomposition)
    check_decomposition(star, cd)
    assert 1 in cd.spine  # the center is always on the spine


def test_caterpillar_path_has_no_pendants():
    for n in (1, 2, 3, 6, 11):
        cd = is_caterpillar(path_graph(n))
        assert isinstance(cd, CaterpillarDecomposition)
        assert list(cd.spine) == list(range(1, n + 1))
        assert all(not p for p in cd.pendants)


def test_spider_is_tree_but_not_caterpillar():
    verdict = is_caterpillar(spider(3, 2))
    assert isinstance(verdict, CaterpillarRefusal)
    assert verdict.reason == "tree but not caterpillar"


def test_non_trees_are_refused():
    cycle = IntersectionGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    verdict = is_caterpillar(cycle)
    assert isinstance(verdict, CaterpillarRefusal)
    assert verdict.reason == "not a tree"

    forest = IntersectionGraph.from_edges(4, [(1, 2), (3, 4)])
    verdict = is_caterpillar(forest)
    assert isinstance(verdict, CaterpillarRefusal)
    assert verdict.reason == "not a tree"


def test_caterpillar_to_diagram_p3():
    cd = CaterpillarDecomposition((1, 2, 3), ((), (), ()))
    dg = caterpillar_to_diagram(cd)
    assert list(intersection_graph(dg).edges()) == [(1, 2), (2, 3)]


def test_caterpillar_to_diagram_single_vertex():
    dg = caterpillar_to_diagram(CaterpillarDecomposition((1,), ((),)))
    assert dg.corners(1) == (1, 2, 1, 2)


def test_caterpillar_to_diagram_is_interval_style():
    cd = random_caterpillar(40, 4)
    dg = caterpillar_to_diagram(cd)
    assert dg.a == dg.c and dg.b == dg.d


def test_caterpillar_to_diagram_rejects_bad_labels():
    with pytest.raises(ValueError):
        caterpillar_to_diagram(CaterpillarDecomposition((1, 3), ((), ())))


def test_random_caterpillar_roundtrip():
    rng = random.Random(63)
    for _ in range(150):
        n = rng.randint(1, 120)
        cd = random_caterpillar(n, rng.randrange(1 << 30))
        dg = caterpillar_to_diagram(cd)
        validate(list(dg.a[1:]), list(dg.b[1:]), list(dg.c[1:]), list(dg.d[1:]))
        g = intersection_graph(dg)
        assert set(g.edges()) == cd.edge_set()
        recovered = is_caterpillar(g)
        assert isinstance(recovered, CaterpillarDecomposition)
        check_decomposition(g, recovered)
        # canonical decomposition is reproducible through another round trip
        again = is_caterpillar(intersection_graph(caterpillar_to_diagram(recovered)))
        assert recovered.same_up_to_reversal(again)


def test_random_caterpillar_deterministic():
    assert random_caterpillar(30, 9) == random_caterpillar(30, 9)


def test_tree_diagrams_are_caterpillars():
    rng = random.Random(64)
    seen_trees = 0
    for _ in range(800):
        dg = random_diagram(rng.randint(1, 8), rng.randrange(1 << 30))
        g = intersection_graph(dg)
        if g.m == g.n - 1 and len(connected_components(g)) == 1:
            seen_trees += 1
            assert isinstance(is_caterpillar(g), CaterpillarDecomposition)
    assert seen_trees > 20  # the sample actually exercises the property
