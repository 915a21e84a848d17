import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kempeminor.graph import (
    IndexOutOfRange,
    LoopEdge,
    MalformedEdgeList,
    MalformedGraph6,
    EmptyPart,
    NoKClique,
    TooLarge,
    add_universal_vertices,
    build_cockade,
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    decode_edgelist,
    decode_graph6,
    encode_edgelist,
    encode_graph6,
    is_connected_subset,
    mask_of,
    path_graph,
    petersen_graph,
    universal_vertex_count,
    vertex_connectivity,
)

from .conftest import graphs, random_graph
from .oracles import brute_connectivity, brute_max_clique

COCKADE_BASE = [1, 2, 2, 2, 2, 2]


def test_build_graph_basics():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert (p3.n, p3.m) == (3, 2)
    assert build_graph(0, []).m == 0
    assert build_graph(4, [(0, 1), (0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (3, [(0, 3)], IndexOutOfRange),
        (3, [(1, 1)], LoopEdge),
        (65, [], TooLarge),
        (-1, [], IndexOutOfRange),
    ],
)
def test_build_graph_errors(n, edges, error):
    with pytest.raises(error):
        build_graph(n, edges)


@given(graphs(max_n=9))
def test_graph_invariants(g):
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        for u in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert g.m == sum(g.degree(v) for v in range(g.n)) // 2 == len(g.edges())


# --- graph6 -----------------------------------------------------------------


def test_graph6_known_strings():
    assert encode_graph6(complete_graph(3)) == "Bw"
    # reference string from networkx for its own Petersen labelling
    ref = decode_graph6("IheA@GUAo")
    assert nx.is_isomorphic(nx.Graph(ref.edges()), nx.petersen_graph())


def test_graph6_roundtrip_petersen():
    g = petersen_graph()
    assert decode_graph6(encode_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert encode_graph6(g) == ref
    assert decode_graph6(ref) == g


@pytest.mark.parametrize("n", [62, 63, 64])
def test_graph6_long_size_field(n):
    rng = random.Random(n)
    g = random_graph(rng, n, 0.3)
    text = encode_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    assert text == nx.to_graph6_bytes(h, header=False).decode().strip()
    assert decode_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x01", "Bx", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        decode_graph6(bad)


def test_graph6_too_large():
    with pytest.raises(TooLarge):
        decode_graph6("~?@@" + "?" * 347)


def test_edgelist_roundtrip():
    g = petersen_graph()
    text = encode_edgelist(g)
    assert text.splitlines()[0] == "10 15"
    assert decode_edgelist(text) == g


@pytest.mark.parametrize("bad", ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 5\n"])
def test_edgelist_malformed(bad):
    with pytest.raises((MalformedEdgeList, IndexOutOfRange)):
        decode_edgelist(bad)


# --- families ---------------------------------------------------------------


@pytest.mark.parametrize("parts, n, m", [([2, 2, 2, 3, 3], 12, 57), ([1, 2, 2, 2, 2, 2], 11, 50), ([5], 5, 0)])
def test_complete_multipartite_counts(parts, n, m):
    g = complete_multipartite(parts)
    assert (g.n, g.m) == (n, m)


def test_complete_multipartite_edge_formula_exhaustive():
    for count in range(1, 7):
        for parts in product(range(1, 4), repeat=count):
            n = sum(parts)
            if n > 12:
                continue
            g = complete_multipartite(parts)
            direct = sum(1 for u, v in combinations(range(n), 2) if g.has_edge(u, v))
            assert g.m == direct == (n * n - sum(p * p for p in parts)) // 2


def test_complete_multipartite_empty_part():
    with pytest.raises(EmptyPart):
        complete_multipartite([2, 0, 1])


def test_cockade_one_copy_is_base():
    assert build_cockade(COCKADE_BASE, 6, 1) == complete_multipartite(COCKADE_BASE)


def test_cockade_two_copies():
    g = build_cockade(COCKADE_BASE, 6, 2)
    assert (g.n, g.m) == (16, 2 * 50 - 15)
    assert g.m == 7 * g.n - 27


def test_cockade_needs_k_clique():
    assert brute_max_clique(complete_multipartite([2, 2])) == 2
    with pytest.raises(NoKClique):
        build_cockade([2, 2], 3, 2)


@pytest.mark.parametrize("copies", [1, 2, 3, 4])
def test_cockade_edge_count_and_connectivity(copies):
    g = build_cockade(COCKADE_BASE, 6, copies)
    assert g.n == 11 + 5 * (copies - 1)
    assert g.m == 7 * g.n - 27
    assert vertex_connectivity(g) == (9 if copies == 1 else 6)


def test_add_universal_vertices():
    assert add_universal_vertices(complete_graph(3), 1) == complete_graph(4)
    assert add_universal_vertices(build_graph(0, []), 10) == complete_graph(10)
    g = add_universal_vertices(path_graph(3), 2)
    assert (g.n, g.m) == (5, 2 + 2 * 3 + 1)
    with pytest.raises(TooLarge):
        add_universal_vertices(complete_graph(60), 5)


# --- connectivity -----------------------------------------------------------


def test_connectivity_named():
    assert vertex_connectivity(complete_graph(10)) == 9
    assert vertex_connectivity(petersen_graph()) == 3
    assert vertex_connectivity(complete_multipartite([2, 2, 2, 3, 3])) == 9
    assert vertex_connectivity(build_graph(1, [])) == 0
    assert vertex_connectivity(build_graph(4, [(0, 1), (2, 3)])) == 0


def test_connectivity_matches_brute_force_sample(rng):
    for _ in range(500):
        n = rng.randint(0, 7)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.7, 0.9]))
        assert vertex_connectivity(g) == brute_connectivity(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(0, 3))
def test_universal_vertices_raise_connectivity(g, t):
    h = add_universal_vertices(g, t)
    expected = min(g.n - 1 + t, brute_connectivity(g) + t) if g.n else max(t - 1, 0)
    assert vertex_connectivity(h) == brute_connectivity(h) == expected


def test_universal_vertex_count():
    assert universal_vertex_count(complete_multipartite([2, 2, 2, 3, 3])) == 0
    assert universal_vertex_count(complete_multipartite([1, 2, 2, 2, 2, 2])) == 1
    assert universal_vertex_count(complete_graph(5)) == 5


def test_is_connected_subset():
    c4 = cycle_graph(4)
    assert is_connected_subset(c4, mask_of([0, 1]))
    assert not is_connected_subset(c4, mask_of([0, 2]))
    assert all(is_connected_subset(c4, 1 << v) for v in range(4))
    assert not is_connected_subset(c4, 0)
