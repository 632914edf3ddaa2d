import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from tyz.graphs import (
    EMPTY,
    MultiDigraph,
    are_isomorphic,
    aut_order,
    automorphisms,
    canonical_form,
    canonical_key,
    degrees,
    disjoint_union,
    format_graph,
    induced_subgraph,
    is_semistable,
    is_stable,
    is_strongly_connected,
    parse_graph,
    relabel,
    weak_components,
)


@st.composite
def small_graphs(draw, max_n=3, max_entry=3):
    n = draw(st.integers(1, max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, max_entry), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return MultiDigraph.from_rows(rows)


# --- parsing and formatting ---


def test_parse_format_round_trip():
    for text in ("0 2;2 0", "2", "1 1;1 1", "0 0 3;2 0 0;0 2 0"):
        g = parse_graph(text)
        assert format_graph(g) == text
        assert parse_graph(format_graph(g)) == g


def test_parse_accepts_newlines():
    assert parse_graph("0 2\n2 0") == parse_graph("0 2;2 0")


def test_parse_ragged_matrix_is_an_error():
    with pytest.raises(ValueError, match="row 2"):
        parse_graph("0 2;2")


def test_parse_reports_position_of_bad_entry():
    with pytest.raises(ValueError, match="row 1, column 2"):
        parse_graph("0 -2;2 0")
    with pytest.raises(ValueError, match="row 2, column 1"):
        parse_graph("0 2;x 0")


def test_from_rows_rejects_nonsquare():
    with pytest.raises(ValueError):
        MultiDigraph.from_rows([[0, 1]])


@given(small_graphs())
def test_format_parse_identity(g):
    assert parse_graph(format_graph(g)) == g


# --- degrees and stability ---


def test_loop_counts_toward_both_degrees():
    d = degrees(parse_graph("2"))
    assert d.outdeg == (2,) and d.indeg == (2,)


def test_degree_examples():
    d = degrees(parse_graph("1 1;1 1"))
    assert d.outdeg == (2, 2) and d.indeg == (2, 2)


@given(small_graphs())
def test_degree_handshake(g):
    outs = g.out_degrees()
    ins = g.in_degrees()
    assert sum(outs) == sum(ins) == g.edge_count


@given(small_graphs())
def test_weight_is_edges_minus_vertices(g):
    assert g.weight == g.edge_count - g.n


def test_stability_examples():
    assert is_stable(parse_graph("2"))
    assert is_stable(parse_graph("0 2;2 0"))
    assert not is_stable(parse_graph("0 1;1 0"))
    assert not is_stable(parse_graph("0 2;1 0"))
    assert is_semistable(parse_graph("0 2;1 0"))
    assert not is_semistable(parse_graph("0 1;1 0"))


def test_empty_graph_is_stable_weight_zero():
    assert is_stable(EMPTY)
    assert EMPTY.weight == 0 and EMPTY.n == 0


@given(small_graphs())
def test_stable_implies_semistable(g):
    if is_stable(g):
        assert is_semistable(g)


@given(small_graphs(), st.randoms())
def test_stability_is_isomorphism_invariant(g, rng):
    per = list(range(g.n))
    rng.shuffle(per)
    assert is_stable(g) == is_stable(relabel(g, tuple(per)))


# --- canonical forms and isomorphism ---


@given(small_graphs(), st.randoms())
def test_canonical_key_is_relabel_invariant(g, rng):
    per = list(range(g.n))
    rng.shuffle(per)
    assert canonical_key(g) == canonical_key(relabel(g, tuple(per)))


def _iso_bruteforce(a, b):
    if a.n != b.n:
        return False
    return any(relabel(a, per) == b for per in permutations(range(a.n)))


@given(small_graphs(max_n=3), small_graphs(max_n=3))
def test_isomorphism_matches_bruteforce(a, b):
    assert are_isomorphic(a, b) == _iso_bruteforce(a, b)


def test_canonical_form_is_isomorphic_to_input():
    g = parse_graph("0 0 3;2 0 0;0 2 0")
    c = canonical_form(g)
    assert are_isomorphic(g, c)
    assert canonical_form(c) == c


# --- automorphisms ---


def _aut_order_bruteforce(g):
    # label-aware automorphisms: a vertex map preserving the matrix, times a
    # bijection on each parallel-edge bundle it maps across
    total = 0
    for per in permutations(range(g.n)):
        if relabel(g, per) == g:
            total += math.prod(math.factorial(e) for row in g.adj for e in row)
    return total


def test_aut_order_examples():
    assert aut_order(parse_graph("2")) == 2
    assert aut_order(parse_graph("5")) == 120
    assert aut_order(parse_graph("0 2;2 0")) == 8  # swap times two label bundles
    assert aut_order(parse_graph("1 1;1 1")) == 2
    assert aut_order(parse_graph("0 4;2 0")) == 48


@given(small_graphs(max_n=3, max_entry=2))
def test_aut_order_matches_bruteforce(g):
    assert aut_order(g) == _aut_order_bruteforce(g)


def test_automorphisms_form_a_group():
    g = parse_graph("0 2;2 0")
    perms = automorphisms(g)
    assert (0, 1) in perms and (1, 0) in perms
    for p in perms:
        for q in perms:
            assert tuple(p[i] for i in q) in perms


# --- connectivity ---


def test_strong_connectivity_examples():
    assert is_strongly_connected(parse_graph("2"))
    assert is_strongly_connected(parse_graph("0 2;2 0"))
    assert not is_strongly_connected(parse_graph("1 1;0 1"))
    assert not is_strongly_connected(parse_graph("2 0;0 2"))


def test_strong_connectivity_rejects_empty():
    with pytest.raises(ValueError):
        is_strongly_connected(EMPTY)


def test_weak_components_of_block_diagonal():
    g = parse_graph("2 0 0;0 1 1;0 1 1")
    comps = weak_components(g)
    assert sorted(c.n for c in comps) == [1, 2]
    keys = {canonical_key(c) for c in comps}
    assert keys == {canonical_key(parse_graph("2")), canonical_key(parse_graph("1 1;1 1"))}


def test_weak_components_of_connected_graph():
    assert len(weak_components(parse_graph("0 2;2 0"))) == 1


# --- assembly ---


def test_disjoint_union_blocks():
    a, b = parse_graph("2"), parse_graph("0 2;2 0")
    u = disjoint_union([a, b])
    assert u.n == 3 and u.edge_count == 6
    assert u.weight == a.weight + b.weight
    assert len(weak_components(u)) == 2


def test_induced_subgraph():
    g = parse_graph("2 0 0;0 1 1;0 1 1")
    assert induced_subgraph(g, [0]) == parse_graph("2")
    assert induced_subgraph(g, [1, 2]) == parse_graph("1 1;1 1")


def test_relabel_identity_and_inverse():
    g = parse_graph("0 0 3;2 0 0;0 2 0")
    ident = tuple(range(g.n))
    assert relabel(g, ident) == g
    per = (2, 0, 1)
    inv = tuple(per.index(i) for i in range(3))
    assert relabel(relabel(g, per), inv) == g
