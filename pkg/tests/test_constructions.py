"""Subdivision schemes, direct constructions, and label lifting."""

import pytest

from hypalg import (
    Graph,
    InputError,
    LabeledLift,
    LinComb,
    SubdivisionScheme,
    alg_equal,
    blowup,
    blowup_scheme,
    box_product,
    box_scheme,
    check_symmetry,
    complete_graph,
    copies_scheme,
    crossing_scheme,
    cycle_graph,
    drop_labels,
    even_expansion,
    even_scheme,
    extend_label_set,
    is_isomorphic,
    lift_labels,
    loose_expansion,
    loose_scheme,
    mixed_scheme,
    nind,
    operator_apply,
    path_graph,
    path_scheme,
    scheme_from_text,
    scheme_to_text,
    single_vertex,
    subdivide,
    triangle_scheme,
)

K2 = complete_graph(2, 2)


# ---------------------------------------------------------------------------
# symmetry checking


def test_check_symmetry_accepts_swappable_blocks():
    f = Graph(2, 4, None, ((0, 2), (0, 3), (1, 2), (1, 3)))
    assert check_symmetry(f, ((0, 1), (2, 3)))
    matching = Graph(2, 4, None, ((0, 2), (1, 3)))
    assert check_symmetry(matching, ((0, 1), (2, 3)))


def test_check_symmetry_detects_asymmetry():
    f = Graph(2, 4, None, ((0, 2), (0, 3), (1, 3)))
    assert not check_symmetry(f, ((0, 1), (2, 3)))
    # an edge between blocks 0,1 but not 0,2 blocks the cyclic permutations
    partial = Graph(2, 3, None, ((0, 1),))
    assert not check_symmetry(partial, ((0,), (1,), (2,)))
    assert check_symmetry(complete_graph(2, 3), ((0,), (1,), (2,)))


def test_check_symmetry_input_errors():
    f = Graph(2, 4, None, ((0, 1),))
    with pytest.raises(InputError):
        check_symmetry(f, ())
    with pytest.raises(InputError):
        check_symmetry(f, ((0,), (1, 2)))
    with pytest.raises(InputError):
        check_symmetry(f, ((0,), (0,)))
    with pytest.raises(InputError):
        check_symmetry(f, ((9,),))
    with pytest.raises(InputError):
        check_symmetry(f, ((0, 1), (2, 3)))  # block {0,1} carries an edge


# ---------------------------------------------------------------------------
# scheme validation and the catalog


def test_scheme_validation():
    edge = Graph(2, 2, None, ((0, 1),))
    with pytest.raises(InputError):
        SubdivisionScheme(Graph(2, 1), edge, 1)  # base uniformity too small
    with pytest.raises(InputError):
        SubdivisionScheme(Graph(2, 0), edge, 2)  # empty vertex gadget
    with pytest.raises(InputError):
        SubdivisionScheme(Graph(3, 1), edge, 2)  # gadget uniformities differ
    with pytest.raises(InputError):
        SubdivisionScheme(Graph(2, 1, (1,)), edge, 2)  # labeled gadget
    with pytest.raises(InputError):
        SubdivisionScheme(Graph(2, 2), Graph(2, 3), 2)  # too few gadget vertices
    with pytest.raises(InputError):  # blocks not swappable
        SubdivisionScheme(
            Graph(2, 2), Graph(2, 4, None, ((0, 2), (0, 3), (1, 3))), 2
        )


def test_scheme_shapes():
    assert box_scheme().m == 2 and box_scheme().s_prime == 0
    assert path_scheme(3).s_prime == 2
    assert triangle_scheme().s_prime == 1
    assert loose_scheme(5).s_prime == 3
    assert even_scheme(6).m == 3 and even_scheme(6).s_prime == 0
    assert mixed_scheme(5, 2).s_prime == 1
    assert blowup_scheme(3).blocks == ((0, 1, 2), (3, 4, 5))


@pytest.mark.parametrize(
    "make, args",
    [
        (blowup_scheme, (0,)),
        (copies_scheme, (0,)),
        (path_scheme, (0,)),
        (mixed_scheme, (3, 0)),
        (mixed_scheme, (3, 2)),
        (loose_scheme, (2,)),
        (even_scheme, (3,)),
    ],
)
def test_catalog_rejects(make, args):
    with pytest.raises(InputError):
        make(*args)


# ---------------------------------------------------------------------------
# subdivision


def test_subdivide_frozen_small_cases():
    assert subdivide(box_scheme(), K2) == Graph(
        2, 4, None, ((0, 1), (0, 2), (1, 3), (2, 3))
    )
    assert subdivide(triangle_scheme(), K2) == complete_graph(2, 3)
    assert is_isomorphic(subdivide(box_scheme(), K2), cycle_graph(4))
    assert is_isomorphic(subdivide(blowup_scheme(2), K2), cycle_graph(4))
    assert is_isomorphic(subdivide(path_scheme(2), cycle_graph(4)), cycle_graph(8))
    assert is_isomorphic(subdivide(path_scheme(3), cycle_graph(3)), cycle_graph(9))
    two = subdivide(copies_scheme(2), path_graph(2))
    assert is_isomorphic(two, Graph(2, 6, None, ((0, 2), (2, 4), (1, 3), (3, 5))))


def test_subdivide_rejects():
    with pytest.raises(InputError):
        subdivide(box_scheme(), complete_graph(3, 3))
    with pytest.raises(InputError):
        subdivide(box_scheme(), Graph(2, 2, (0, 1), ((0, 1),)))


def test_subdivide_matches_direct_blowup():
    for m, g in [(2, K2), (2, path_graph(2)), (3, K2)]:
        assert subdivide(blowup_scheme(m), g) == blowup(g, m)


def test_subdivide_matches_direct_expansions():
    p2 = path_graph(2)
    assert subdivide(loose_scheme(3), p2) == loose_expansion(p2, 3)
    assert subdivide(loose_scheme(4), K2) == loose_expansion(K2, 4)
    assert subdivide(even_scheme(4), p2) == even_expansion(p2, 4)
    assert subdivide(even_scheme(6), K2) == even_expansion(K2, 6)
    assert loose_expansion(p2, 3) == Graph(
        3, 5, None, ((0, 1, 3), (1, 2, 4))
    )
    assert even_expansion(K2, 4) == Graph(4, 4, None, ((0, 1, 2, 3),))


def test_subdivide_matches_box_product():
    for g in [path_graph(2), cycle_graph(4)]:
        assert subdivide(box_scheme(), g) == box_product(g, K2)


def test_crossing_differs_from_box():
    sub = subdivide(crossing_scheme(), path_graph(2))
    assert sub.e == box_product(path_graph(2), K2).e
    assert is_isomorphic(sub, box_product(path_graph(2), K2))
    # on an odd cycle the parallel and crossed wirings genuinely differ
    assert not is_isomorphic(
        subdivide(crossing_scheme(), cycle_graph(3)),
        subdivide(box_scheme(), cycle_graph(3)),
    )


# ---------------------------------------------------------------------------
# direct constructions


def test_blowup_replicates_labels_and_edges():
    g = Graph(2, 2, (3, 5), ((0, 1),))
    b = blowup(g, 2)
    assert b == Graph(2, 4, (3, 3, 5, 5), ((0, 2), (0, 3), (1, 2), (1, 3)))
    assert blowup(g, 1) == g
    assert blowup(complete_graph(3, 3), 2).e == 8
    with pytest.raises(InputError):
        blowup(g, 0)


def test_box_product_grid_and_cube():
    grid = box_product(path_graph(2), K2)
    direct = Graph(2, 6, None, ((0, 1), (2, 3), (4, 5), (0, 2), (1, 3), (2, 4), (3, 5)))
    assert grid.e == 7
    assert is_isomorphic(grid, direct)
    cube = box_product(cycle_graph(4), K2)
    bits = [(x, y) for x in range(8) for y in range(8) if bin(x ^ y).count("1") == 1]
    hamming = Graph(2, 8, None, tuple((x, y) for x, y in bits if x < y))
    assert cube.e == 12
    assert is_isomorphic(cube, hamming)
    with pytest.raises(InputError):
        box_product(complete_graph(3, 3), K2)


def test_expansion_rejects():
    with pytest.raises(InputError):
        loose_expansion(K2, 2)
    with pytest.raises(InputError):
        loose_expansion(complete_graph(3, 3), 4)
    with pytest.raises(InputError):
        even_expansion(K2, 3)
    with pytest.raises(InputError):
        even_expansion(complete_graph(3, 3), 4)


# ---------------------------------------------------------------------------
# closed-form behaviour of scheme operators


def test_closed_form_nind_labeled_matches_enumeration():
    scheme = box_scheme()
    for g in [single_vertex(2), K2]:
        base = Graph(2, g.n, None, g.edges)
        f = extend_label_set(nind(LinComb.from_graph(base)), {0, 1})
        enum = operator_apply(
            scheme.operator(labeled=True, attach=False), f, method="enumerate"
        )
        closed = scheme.closed_form_nind(base, labeled=True, labels={0})
        assert alg_equal(enum, closed)


def test_closed_form_nind_unlabeled_requires_no_isolated_vertices():
    scheme = box_scheme()
    with pytest.raises(InputError):
        scheme.closed_form_nind(single_vertex(2, 0), labeled=False, labels={0})
    with pytest.raises(InputError):
        scheme.closed_form_nind(Graph(2, 2, (0, 1), ((0, 1),)), True, {0})
    # schemes whose vertex gadget is edgeless have no such restriction
    loose = loose_scheme(3)
    out = loose.closed_form_nind(Graph(2, 1), labeled=False, labels={0})
    assert out == nind(LinComb.from_graph(Graph(3, 1)))


# ---------------------------------------------------------------------------
# label lifting


def test_lift_labels_frozen():
    f = nind(LinComb.from_graph(path_graph(2)))
    lifted = lift_labels(f, 1)
    assert lifted == extend_label_set(f, {0, 1})
    assert lifted.label_set == frozenset({0, 1})


def test_lift_labels_rejects():
    mixed = LinComb.from_graph(K2) + LinComb.from_graph(single_vertex(2))
    with pytest.raises(InputError):
        lift_labels(mixed, 1)  # mixed orders
    with pytest.raises(InputError):
        lift_labels(LinComb.from_graph(K2), 0)  # label already present
    with pytest.raises(InputError):
        lift_labels("not an element", 1)


def test_labeled_lift_record():
    f = nind(LinComb.from_graph(K2))
    rec = LabeledLift.of(f, 1)
    assert rec.label == 1
    assert rec.source.n == 2
    assert rec.lifted == lift_labels(f, 1)


def test_drop_labels():
    h = Graph(2, 3, (0, 1, 0), ((0, 1), (1, 2)))
    assert drop_labels(h, 1) == Graph(2, 2, (0, 0), ())
    assert drop_labels(h, 7) == h
    all_dumped = Graph(2, 2, (1, 1), ((0, 1),))
    assert drop_labels(all_dumped, 1) == Graph(2, 0)


# ---------------------------------------------------------------------------
# scheme files


def test_scheme_text_round_trip():
    for scheme in [
        blowup_scheme(2),
        copies_scheme(3),
        path_scheme(2),
        box_scheme(),
        crossing_scheme(),
        triangle_scheme(),
        loose_scheme(3),
        even_scheme(4),
        mixed_scheme(5, 2),
    ]:
        assert scheme_from_text(scheme_to_text(scheme)) == scheme


def test_scheme_text_accepts_scrambled_block_positions():
    text = (
        "graph{r=2;n=1;l=;e=}\n"
        "# blocks listed out of writer order\n"
        "graph{r=2;n=3;l=;e=(0 1)(1 2)}\n"
        "sets=(0)(2)\n"
    )
    assert scheme_from_text(text) == path_scheme(2)


@pytest.mark.parametrize(
    "text",
    [
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\n",  # no sets=
        "graph{r=2;n=1;l=;e=}\nsets=(0)(1)\n",  # one graph line
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=(0)(1\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=(0)(0)\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=(0 1)\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=(0)(9)\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\nsets=(x)\n",
        "graph{r=2;n=1;l=;e=}\ngraph{r=2;n=2;l=;e=(0 1)}\n"
        "sets=(0)(1)\nsets=(0)(1)\n",
    ],
)
def test_scheme_text_rejects(text):
    with pytest.raises(InputError):
        scheme_from_text(text)
