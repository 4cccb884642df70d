"""Graph values, canonical representatives, isomorphism, text format."""

from itertools import combinations, permutations

import pytest

from hypalg import (
    Graph,
    Injection,
    InputError,
    automorphism_count,
    canonical,
    complement,
    complete_bipartite,
    complete_graph,
    contains,
    cycle_graph,
    empty_graph,
    graph_from_text,
    graph_to_text,
    induced_subgraph,
    is_isomorphic,
    path_graph,
    single_vertex,
)
from oracles import brute_canonical


def test_edge_normalization():
    g = Graph(2, 4, None, ((3, 1), (0, 2), (1, 3), (2, 0)))
    assert g.edges == ((0, 2), (1, 3))
    assert g.labels == (0, 0, 0, 0)
    assert g.e == 2
    assert g.has_edge((3, 1))
    assert not g.has_edge((0, 1))


def test_degrees():
    assert path_graph(2).degrees == (1, 2, 1)
    assert complete_graph(3, 4).degrees == (3, 3, 3, 3)


@pytest.mark.parametrize(
    "bad",
    [
        lambda: Graph(0, 2),
        lambda: Graph(2, -1),
        lambda: Graph(2, 3, (0, 1)),  # label count
        lambda: Graph(2, 3, None, ((0, 1, 2),)),  # arity
        lambda: Graph(2, 3, None, ((0, 0),)),  # repeated vertex
        lambda: Graph(2, 3, None, ((0, 3),)),  # out of range
        lambda: Graph(2, 2, None, ((-1, 0),)),
    ],
)
def test_construction_rejects(bad):
    with pytest.raises(InputError):
        bad()


def test_injection_basics():
    alpha = Injection(2, 4, (3, 1))
    assert alpha(0) == 3 and alpha(1) == 1
    beta = Injection(2, 2, (1, 0))
    assert alpha.compose(beta).image == (1, 3)
    assert Injection.identity(3).image == (0, 1, 2)
    with pytest.raises(InputError):
        Injection(2, 4, (1, 1))
    with pytest.raises(InputError):
        Injection(2, 2, (0, 2))
    with pytest.raises(InputError):
        beta.compose(alpha)  # sizes don't line up


def test_induced_subgraph():
    c4 = cycle_graph(4)
    sub = induced_subgraph(c4, Injection(3, 4, (0, 1, 2)))
    assert sub == path_graph(2)
    labeled = Graph(2, 3, (0, 1, 0), ((0, 1), (1, 2)))
    sub2 = induced_subgraph(labeled, Injection(2, 3, (2, 1)))
    assert sub2 == Graph(2, 2, (0, 1), ((0, 1),))
    with pytest.raises(InputError):
        induced_subgraph(c4, Injection(2, 3, (0, 1)))


def test_contains_and_complement():
    assert contains(complete_graph(2, 3), path_graph(2))
    assert not contains(path_graph(2), complete_graph(2, 3))
    assert not contains(Graph(2, 3, (1, 0, 0), ((0, 1),)), empty_graph(2, 3))
    assert complement(empty_graph(2, 4)) == complete_graph(2, 4)
    assert complement(complement(cycle_graph(5))) == cycle_graph(5)


def test_catalog_shapes():
    assert cycle_graph(3) == complete_graph(2, 3)
    assert path_graph(0) == single_vertex()
    assert complete_bipartite(2, 2).e == 4
    assert is_isomorphic(complete_bipartite(2, 2), cycle_graph(4))
    assert empty_graph(3, 5).edges == ()
    with pytest.raises(InputError):
        cycle_graph(2)


@pytest.mark.parametrize(
    "g,aut",
    [
        (cycle_graph(4), 8),
        (cycle_graph(5), 10),
        (cycle_graph(6), 12),
        (complete_graph(2, 4), 24),
        (path_graph(2), 2),
        (Graph(2, 4, None, ((0, 1), (2, 3))), 8),
        (complete_graph(3, 3), 6),
        (Graph(2, 3, None, ((0, 1),)), 2),
        (empty_graph(2, 4), 24),
    ],
)
def test_automorphism_counts(g, aut):
    assert automorphism_count(g) == aut
    assert brute_canonical(g)[1] == aut


def test_canonical_exhaustive_small():
    # every 2-uniform graph on <= 4 vertices: canonical must agree with the
    # brute-force classes (constant on each class, distinct across classes)
    for n in range(5):
        slots = list(combinations(range(n), 2))
        class_of = {}
        for bits in range(1 << len(slots)):
            edges = tuple(slots[i] for i in range(len(slots)) if bits >> i & 1)
            g = Graph(2, n, None, edges)
            bkey = brute_canonical(g)[0]
            crep, caut = canonical(g)
            assert caut == brute_canonical(g)[1]
            prev = class_of.get((bkey.labels, bkey.edges))
            if prev is None:
                class_of[(bkey.labels, bkey.edges)] = crep
            else:
                assert prev == crep
        # distinct classes -> distinct representatives
        reps = list(class_of.values())
        assert len(set(reps)) == len(reps)


def test_canonical_respects_labels():
    g1 = Graph(2, 2, (0, 1), ((0, 1),))
    g2 = Graph(2, 2, (1, 0), ((0, 1),))
    assert canonical(g1)[0] == canonical(g2)[0]
    g3 = Graph(2, 2, (1, 1), ((0, 1),))
    assert canonical(g1)[0] != canonical(g3)[0]


def test_canonical_three_uniform():
    g = Graph(3, 5, None, ((0, 1, 2), (2, 3, 4)))
    for perm in permutations(range(5)):
        assert canonical(g.relabel_vertices(perm))[0] == canonical(g)[0]
    assert automorphism_count(g) == brute_canonical(g)[1]


def test_is_isomorphic():
    assert is_isomorphic(cycle_graph(6), Graph(2, 6, None,
        ((0, 2), (0, 4), (1, 3), (1, 5), (2, 5), (3, 4))))  # relabeled C6
    # same degree sequence, different graphs
    two_triangles = Graph(2, 6, None, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
    assert not is_isomorphic(cycle_graph(6), two_triangles)
    assert not is_isomorphic(cycle_graph(4), path_graph(3))
    assert is_isomorphic(empty_graph(2, 0), empty_graph(2, 0))
    # labels distinguish
    assert not is_isomorphic(
        Graph(2, 2, (0, 1), ((0, 1),)), Graph(2, 2, (0, 0), ((0, 1),))
    )


def test_text_round_trip():
    cases = [
        empty_graph(2, 0),
        cycle_graph(4),
        Graph(2, 3, (1, 0, 2), ((0, 2),)),
        complete_graph(3, 4),
    ]
    for g in cases:
        assert graph_from_text(graph_to_text(g)) == g
    assert graph_to_text(cycle_graph(4)) == "graph{r=2;n=4;l=;e=(0 1)(0 3)(1 2)(2 3)}"
    assert (
        graph_to_text(Graph(2, 2, (0, 1), ((0, 1),)))
        == "graph{r=2;n=2;l=0,1;e=(0 1)}"
    )


@pytest.mark.parametrize(
    "text",
    [
        "graph{r=2;n=2;l=;e=(1 0)}",  # edge not increasing
        "graph{r=2;n=3;l=;e=(1 2)(0 1)}",  # list not sorted
        "graph{r=2;n=3;l=;e=(0 1)(0 1)}",  # repeat
        "graph{r=2;n=2;l=0;e=}",  # label count
        "graph{r=2;n=2;l=;e=(0 1}",  # malformed
        "graph{r=2;n=2;e=}",  # missing l=
        "graph{r=2;n=2;l=;e=(0 a)}",
        "notagraph",
    ],
)
def test_text_rejects(text):
    with pytest.raises(InputError):
        graph_from_text(text)


def test_relabel_vertices():
    g = Graph(2, 3, (0, 1, 2), ((0, 1),))
    h = g.relabel_vertices((2, 0, 1))
    assert h == Graph(2, 3, (1, 2, 0), ((0, 2),))
    with pytest.raises(InputError):
        g.relabel_vertices((0, 0, 1))
