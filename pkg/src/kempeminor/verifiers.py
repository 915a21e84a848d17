"""Lemma harnesses, recognition of the two exceptional K_9-minor-free families,
and seeded generators for Kempe-colored and uniquely colorable graphs."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Sequence

from .coloring import Partition, Uniqueness, unique_coloring, verify_partition
from .graph import (
    Graph,
    GraphError,
    bits,
    build_graph,
    cliques_of_size,
    complete_graph,
    is_connected_subset,
    lowest,
    vertex_connectivity,
)
from .minor import DEFAULT_BUDGET, MinorStatus, SearchBudget, find_clique_minor


class NotKempe(ValueError):
    pass


class TooSmall(ValueError):
    pass


def _require_kempe(g: Graph, p: Partition) -> None:
    report = verify_partition(g, p)
    if not report.kempe:
        raise NotKempe(report.reason or "partition is not a Kempe-coloring")


@dataclass(frozen=True)
class Lemma1Report:
    k: int
    n: int
    m: int
    bound: int
    holds: bool
    equality: bool
    all_pairs_trees: bool
    non_tree_pair: tuple[int, int] | None

    def to_json(self) -> dict:
        return asdict(self)


def check_lemma1(g: Graph, p: Partition) -> Lemma1Report:
    """Edge lower bound (k-1)n - C(k,2) for a Kempe-coloring of order k, and its tree condition."""
    _require_kempe(g, p)
    k = len(p)
    bound = (k - 1) * g.n - k * (k - 1) // 2
    non_tree = None
    for i, j in combinations(range(k), 2):
        s = p.classes[i] | p.classes[j]
        if g.induced_edge_count(s) != s.bit_count() - 1 or not is_connected_subset(g, s):
            non_tree = (i, j)
            break
    return Lemma1Report(
        k=k,
        n=g.n,
        m=g.m,
        bound=bound,
        holds=g.m >= bound,
        equality=g.m == bound,
        all_pairs_trees=non_tree is None,
        non_tree_pair=non_tree,
    )


def check_lemma2(g: Graph, p: Partition) -> bool:
    _require_kempe(g, p)
    return vertex_connectivity(g) >= len(p) - 1


# ---------------------------------------------------------------------------
# exceptional structure


def multipartite_profile(g: Graph) -> list[int] | None:
    """Sorted part sizes if g is complete multipartite, else None.

    The parts are the components of the complement, and each must be an anticlique.
    """
    left = g.all_vertices
    sizes = []
    while left:
        v = lowest(left)
        part = g.all_vertices & ~g.adj[v]
        if part & left != part:
            return None
        for u in bits(part):
            if g.all_vertices & ~g.adj[u] != part:
                return None
        sizes.append(part.bit_count())
        left &= ~part
    return sorted(sizes)


def is_cockade(g: Graph, parts: Sequence[int] = (1, 2, 2, 2, 2, 2), k: int = 6) -> bool:
    """Whether g is a (K_parts, k)-cockade.

    Splits along any k-clique whose removal disconnects g. A clique lies
    inside one side of a clique-sum, so the split is forced whenever g is a
    cockade whose pieces are more than k-connected.
    """
    base = sorted(parts)
    base_n = sum(parts)
    if g.n < base_n:
        return False
    if g.n == base_n:
        return multipartite_profile(g) == base
    for clique in cliques_of_size(g, k):
        cmask = sum(1 << v for v in clique)
        rest = g.all_vertices & ~cmask
        first = _component(g, lowest(rest), rest)
        if first == rest:
            continue
        left, _ = g.subgraph(first | cmask)
        right, _ = g.subgraph((rest & ~first) | cmask)
        return is_cockade(left, parts, k) and is_cockade(right, parts, k)
    return False


def _component(g: Graph, v: int, within: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def exceptional_match(g: Graph) -> str | None:
    if multipartite_profile(g) == [2, 2, 2, 3, 3]:
        return "K22233"
    if is_cockade(g):
        return "Cockade"
    return None


@dataclass(frozen=True)
class Theorem0Report:
    n: int
    m: int
    meets_edge_bound: bool
    k9: MinorStatus
    exceptional_match: str | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "meets_edge_bound": self.meets_edge_bound,
            "k9": self.k9.value,
            "exceptional_match": self.exceptional_match,
        }


def classify_theorem0(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> Theorem0Report:
    if g.n <= 8:
        raise TooSmall(f"need more than 8 vertices, got {g.n}")
    result = find_clique_minor(g, 9, budget)
    return Theorem0Report(
        n=g.n,
        m=g.m,
        meets_edge_bound=g.m >= 7 * g.n - 27,
        k9=result.status,
        exceptional_match=exceptional_match(g),
    )


# ---------------------------------------------------------------------------
# generators


def generate_uniquely_colorable(
    k: int,
    extra: int,
    seed: int = 0,
    verify: bool = True,
) -> tuple[Graph, Partition]:
    """K_k plus ``extra`` vertices, each joined to every vertex outside its (seeded) class."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k + extra > 20:
        raise GraphError(f"k + extra = {k + extra} exceeds 20")
    rng = random.Random(seed)
    classes = [1 << i for i in range(k)]
    edges = list(combinations(range(k), 2))
    for v in range(k, k + extra):
        target = rng.randrange(k)
        for j, c in enumerate(classes):
            if j != target:
                edges.extend((u, v) for u in bits(c))
        classes[target] |= 1 << v
    g = build_graph(k + extra, edges)
    p = Partition.of_masks(classes)
    if verify:
        result = unique_coloring(g, k)
        if result.status is not Uniqueness.UNIQUE or result.partition != p:
            raise AssertionError(f"generator produced a non-unique instance (k={k}, extra={extra}, seed={seed})")
    return g, p


def generate_kempe_colored(
    sizes: Sequence[int],
    seed: int = 0,
    drop: float = 0.5,
) -> tuple[Graph, Partition]:
    """Complete multipartite graph on ``sizes`` with edges removed while every class pair stays connected.

    Each edge is visited once in seeded order and removed with probability
    ``drop`` if that keeps its class pair connected. ``drop=1`` ends with
    every class pair inducing a spanning tree.
    """
    rng = random.Random(seed)
    start = 0
    classes = []
    for s in sizes:
        classes.append(((1 << s) - 1) << start)
        start += s
    label = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(label)
    adj = [0] * n
    for u, v in combinations(range(n), 2):
        if label[u] != label[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    rng.shuffle(edges)
    for u, v in edges:
        if rng.random() >= drop:
            continue
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        pair = classes[label[u]] | classes[label[v]]
        if not _connected_under(adj, pair):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    g = build_graph(n, [(u, v) for u in range(n) for v in bits(adj[u]) if u < v])
    return g, Partition.of_masks(classes)


def _connected_under(adj: list[int], s: int) -> bool:
    seen = frontier = s & -s
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen == s


def thin_preserving_uniqueness(
    g: Graph,
    p: Partition,
    seed: int = 0,
    attempts: int | None = None,
) -> Graph:
    """Remove edges in seeded order while ``p`` stays the unique len(p)-coloring."""
    k = len(p)
    rng = random.Random(seed)
    edges = g.edges()
    order = edges[:]
    rng.shuffle(order)
    if attempts is not None:
        order = order[:attempts]
    current = set(edges)
    for e in order:
        current.discard(e)
        h = build_graph(g.n, sorted(current))
        if unique_coloring(h, k).status is not Uniqueness.UNIQUE:
            current.add(e)
    return build_graph(g.n, sorted(current))


def k8_join_p3() -> tuple[Graph, Partition]:
    """K_8 joined with the path a-b-c (vertices 8, 9, 10), with its Kempe 10-coloring."""
    edges = list(combinations(range(8), 2))
    edges += [(u, v) for u in range(8) for v in (8, 9, 10)]
    edges += [(8, 9), (9, 10)]
    g = build_graph(11, edges)
    return g, Partition.from_lists([[i] for i in range(8)] + [[8, 10], [9]])


def singleton_partition(n: int) -> Partition:
    return Partition.of_masks(1 << v for v in range(n))


def complete_with_singletons(n: int) -> tuple[Graph, Partition]:
    return complete_graph(n), singleton_partition(n)


# ---------------------------------------------------------------------------
# seeded corpora


def kempe_corpus(per_k: int = 24, seed: int = 0, max_k: int = 10) -> list[tuple[Graph, Partition]]:
    """Kempe-colored graphs for k = 2..max_k with class sizes 1..3.

    Thinning strength cycles through none, partial and full, so both the
    strict and the tight case of the edge bound appear for every k.
    """
    rng = random.Random(seed)
    out = []
    for k in range(2, max_k + 1):
        for i in range(per_k):
            sizes = [rng.randint(1, 3) for _ in range(k)]
            drop = (0.0, 0.5, 1.0)[i % 3]
            out.append(generate_kempe_colored(sizes, seed=rng.randrange(2**32), drop=drop))
    return out


def unique_corpus(
    ks: Sequence[int] = range(1, 11),
    extras: Sequence[int] = range(5),
    seeds: Sequence[int] = (0,),
    thin: bool = False,
) -> list[tuple[int, int, int, Graph, Partition]]:
    """(k, extra, seed, graph, partition) for uniquely k-colorable graphs, optionally thinned."""
    out = []
    for k in ks:
        for extra in extras:
            for s in seeds:
                g, p = generate_uniquely_colorable(k, extra, s)
                if thin:
                    g = thin_preserving_uniqueness(g, p, s)
                out.append((k, extra, s, g, p))
    return out
