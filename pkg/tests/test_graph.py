import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from graphgen import graphs_up_to, labeled_graphs, to_nx
from praag.errors import NotChordal, NotConnected
from praag.graph import (
    ForbiddenWitness,
    Leaf,
    Paste,
    PerfectEliminationOrder,
    SimplicialGraph,
    chordal_certificate,
    chordal_pasting_tree,
    clique_census,
    complete_graph,
    complete_join_decomposition,
    connected_components,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    embed_in_ladder,
    enumerate_cliques,
    fan_graph,
    flatten_tree,
    is_chordal,
    is_elementary_type,
    is_induced_cycle,
    is_ladder,
    is_perfect_elimination_order,
    join,
    ladder_graph,
    path_graph,
    star_graph,
    subsquare_census,
    tree_leaves,
    tree_vertices,
)

FAN = fan_graph(4)


def random_graph(draw_edges, n):
    pairs = list(itertools.combinations(range(n), 2))
    return SimplicialGraph.from_edges(n, [e for e, keep in zip(pairs, draw_edges) if keep])


graphs = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda bits: random_graph(bits, n)
    )
)


def test_graph_validation():
    with pytest.raises(ValueError):
        SimplicialGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimplicialGraph.from_edges(2, [(0, 2)])
    g = SimplicialGraph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.vertices == ("v1", "v2", "v3")


def test_fan_basics():
    assert FAN.d == 5 and FAN.num_edges == 7
    assert FAN.edge_list == ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4))


def test_connected_components_examples():
    assert connected_components(FAN) == [[0, 1, 2, 3, 4]]
    assert connected_components(edgeless_graph(3)) == [[0], [1], [2]]
    u = disjoint_union(complete_graph(3), path_graph(2))
    assert connected_components(u) == [[0, 1, 2], [3, 4]]
    assert connected_components(FAN, within=[1, 2, 4]) == [[1, 2], [4]]


def test_clique_examples():
    assert enumerate_cliques(FAN, 3) == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]
    assert enumerate_cliques(FAN, 4) == []
    assert enumerate_cliques(complete_graph(4), 3) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert enumerate_cliques(FAN, 0) == [()]
    assert clique_census(FAN, 4) == (1, 5, 7, 3, 0)


def test_clique_census_matches_networkx():
    for g in graphs_up_to(7):
        counts = {}
        for c in nx.enumerate_all_cliques(to_nx(g)):
            counts[len(c)] = counts.get(len(c), 0) + 1
        for n in range(1, g.d + 1):
            assert len(enumerate_cliques(g, n)) == counts.get(n, 0)


def test_chordal_examples():
    cert = chordal_certificate(FAN)
    assert isinstance(cert, PerfectEliminationOrder)
    assert is_perfect_elimination_order(FAN, cert.order)
    c4 = cycle_graph(4)
    w = chordal_certificate(c4)
    assert isinstance(w, ForbiddenWitness) and sorted(w.vertices) == [0, 1, 2, 3]
    assert not is_chordal(ladder_graph(2))


def has_chordless_cycle(g):
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    for k in range(4, g.d + 1):
        for sub in itertools.combinations(range(g.d), k):
            h = g.induced(sub)
            if h.num_edges == k and all(len(a) == 2 for a in h.adjacency) and len(connected_components(h)) == 1:
                return True
    return False


def test_chordality_matches_brute_force_up_to_7():
    for g in graphs_up_to(7):
        cert = chordal_certificate(g)
        if isinstance(cert, PerfectEliminationOrder):
            assert is_perfect_elimination_order(g, cert.order)
            assert not has_chordless_cycle(g)
        else:
            assert is_induced_cycle(g, cert.vertices)
            assert has_chordless_cycle(g)


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


def check_tree(g, tree):
    """Shared sets are cliques equal to the children's overlap; children are proper."""
    if isinstance(tree, Paste):
        whole = set(tree_vertices(tree))
        left, right = set(tree_vertices(tree.left)), set(tree_vertices(tree.right))
        assert set(tree.shared) == left & right
        assert g.is_clique(tree.shared)
        assert left < whole and right < whole
        check_tree(g, tree.left)
        check_tree(g, tree.right)
    else:
        assert g.is_clique(tree.vertices)


def test_pasting_tree_fan():
    tree = chordal_pasting_tree(FAN)
    # smallest clique separator {v1, v3} first, then {v1, v4}
    assert tree == Paste(Leaf((0, 1, 2)), Paste(Leaf((0, 2, 3)), Leaf((0, 3, 4)), (0, 3)), (0, 2))
    assert tree_leaves(tree) == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]
    verts, edges = flatten_tree(tree)
    assert verts == set(range(5)) and edges == set(FAN.edges)


def test_pasting_tree_small_cases():
    assert chordal_pasting_tree(complete_graph(4)) == Leaf((0, 1, 2, 3))
    assert chordal_pasting_tree(path_graph(3)) == Paste(Leaf((0, 1)), Leaf((1, 2)), (1,))
    with pytest.raises(NotChordal):
        chordal_pasting_tree(cycle_graph(4))
    with pytest.raises(NotConnected):
        chordal_pasting_tree(edgeless_graph(2))


def test_pasting_tree_flattens_for_all_connected_chordal_up_to_7():
    for g in graphs_up_to(7, connected=True):
        if not is_chordal(g):
            continue
        tree = chordal_pasting_tree(g)
        verts, edges = flatten_tree(tree)
        assert verts == set(range(g.d)) and edges == set(g.edges)
        check_tree(g, tree)


def test_elementary_type_examples():
    w = is_elementary_type(path_graph(4))
    assert w == ForbiddenWitness("L3", (0, 1, 2, 3))
    assert is_elementary_type(FAN) == ForbiddenWitness("L3", (1, 2, 3, 4))
    assert is_elementary_type(complete_graph(3)) is True
    assert is_elementary_type(cycle_graph(4)).kind == "C4"


def trivially_perfect(g):
    """Built from single vertices by disjoint unions and adding a dominating vertex."""
    if g.d <= 1:
        return True
    comps = connected_components(g)
    if len(comps) > 1:
        return all(trivially_perfect(g.induced(c)) for c in comps)
    for v in range(g.d):
        if len(g.adjacency[v]) == g.d - 1:
            return trivially_perfect(g.induced([u for u in range(g.d) if u != v]))
    return False


def test_elementary_type_matches_recursive_oracle():
    for g in graphs_up_to(6):
        et = is_elementary_type(g)
        assert (et is True) == trivially_perfect(g)
        if et is True:
            assert is_chordal(g)


def test_subsquare_census_examples():
    assert subsquare_census(ladder_graph(1)).q == 1 and subsquare_census(ladder_graph(1)).holds
    one = subsquare_census(edgeless_graph(1))
    assert one.q == 0 and one.holds
    q3 = subsquare_census(ladder_graph(3))
    assert (q3.q, q3.lhs, q3.holds) == (3, 3, True)


def test_square_count_identity_on_ladder_subgraphs():
    for n in range(1, 5):
        lad = ladder_graph(n)
        for mask in range(1, 1 << lad.d):
            sub = [v for v in range(lad.d) if mask >> v & 1]
            assert subsquare_census(lad.induced(sub)).holds


def test_ladder_embeddings():
    assert embed_in_ladder(cycle_graph(4), 1) is not None
    assert embed_in_ladder(complete_graph(4), 3) is None
    emb = embed_in_ladder(path_graph(4), 2)
    lad = ladder_graph(2)
    assert emb is not None
    for i, j in itertools.combinations(range(4), 2):
        assert path_graph(4).has_edge(i, j) == lad.has_edge(emb[i], emb[j])
    assert is_ladder(ladder_graph(3))[0] == 3
    assert is_ladder(cycle_graph(6)) is None


def test_ladder_recognition_matches_networkx():
    for n in range(1, 4):
        lad = to_nx(ladder_graph(n))
        for g in graphs_up_to(7):
            if g.d == 2 * n + 2:
                assert (is_ladder(g) is not None) == nx.is_isomorphic(to_nx(g), lad)


def test_join_decomposition_examples():
    assert complete_join_decomposition(complete_graph(4)) == ((0,), (1, 2, 3))
    assert complete_join_decomposition(cycle_graph(4)) == ((0, 2), (1, 3))
    assert complete_join_decomposition(path_graph(3)) == ((1,), (0, 2))
    assert complete_join_decomposition(path_graph(4)) is None


def test_join_decomposition_property():
    for g in labeled_graphs(5):
        split = complete_join_decomposition(g)
        comp_connected = len(connected_components(g.complement())) == 1
        assert (split is None) == comp_connected
        if split is not None:
            a, b = split
            assert sorted(a + b) == list(range(g.d))
            assert all(g.has_edge(x, y) for x in a for y in b)


def test_join_and_union_builders():
    j = join(path_graph(2), path_graph(2))
    assert j.num_edges == 6 and j.d == 4
    assert star_graph(3).num_edges == 3
