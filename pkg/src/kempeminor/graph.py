"""Immutable bitset graphs, codecs, the special families, and connectivity.

Vertices are ``0..n-1`` and every neighbourhood is a Python ``int`` used as a
bitset, so vertex sets throughout the package are plain ints as well.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for malformed graph input."""


class IndexOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class TooLarge(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class EmptyPart(GraphError):
    pass


class NoKClique(GraphError):
    pass


# ---------------------------------------------------------------------------
# bitset helpers


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# the graph type


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbours_of_set(self, s: int) -> int:
        """Vertices outside ``s`` with a neighbour in ``s``."""
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out & ~s

    def induced_edge_count(self, s: int) -> int:
        return sum((self.adj[v] & s).bit_count() for v in bits(s)) // 2

    def subgraph(self, s: int) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``s`` relabelled to ``0..|s|-1``, plus the old labels."""
        labels = list(bits(s))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return build_graph(len(labels), edges), labels

    def with_edge(self, u: int, v: int) -> Graph:
        return build_graph(self.n, self.edges() + [(u, v)])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise IndexOutOfRange(f"negative vertex count {n}")
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n, tuple(adj), m)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus all edges between them; ``h`` is shifted by ``g.n``."""
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return build_graph(g.n + h.n, edges)


# ---------------------------------------------------------------------------
# codecs


def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    out = [_graph6_size(g.n)]
    acc = count = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6("character outside the graph6 range")
    values = [ord(c) - 63 for c in s]
    if values[0] == 63:
        if len(values) < 4 or values[1] == 63:
            raise MalformedGraph6("truncated size field")
        n = values[1] << 12 | values[2] << 6 | values[3]
        if n <= 62:
            raise MalformedGraph6("non-canonical size field")
        body = values[4:]
    else:
        n = values[0]
        body = values[1:]
    if n > MAX_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise MalformedGraph6(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    stream = 0
    for b in body:
        stream = stream << 6 | b
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    stream >>= pad
    edges = []
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if stream >> k & 1:
                edges.append((i, j))
    return build_graph(n, edges)


def encode_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def decode_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        if not rows or len(rows[0]) != 2:
            raise MalformedEdgeList("first line must be 'n m'")
        n, m = (int(t) for t in rows[0])
        pairs = rows[1:]
        if len(pairs) != m or any(len(p) != 2 for p in pairs):
            raise MalformedEdgeList(f"expected {m} lines of 'u v'")
        return build_graph(n, [(int(u), int(v)) for u, v in pairs])
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise MalformedEdgeList(str(exc)) from exc


# ---------------------------------------------------------------------------
# families


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(p < 1 for p in parts):
        raise EmptyPart(f"part sizes must be positive: {list(parts)}")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def cliques_of_size(g: Graph, k: int, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """All k-cliques as sorted tuples, in lexicographic order."""
    pool = g.all_vertices if within is None else within

    def grow(clique: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        if len(clique) == k:
            yield clique
            return
        for v in bits(cand):
            if (cand >> (v + 1)).bit_count() + 1 < k - len(clique):
                return
            yield from grow(clique + (v,), cand & g.adj[v] & ~((2 << v) - 1))

    yield from grow((), pool)


def lex_least_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    return next(cliques_of_size(g, k), None)


def build_cockade(parts: Sequence[int], k: int, copies: int) -> Graph:
    """(H, k)-cockade with H complete multipartite, glued along lexicographically least k-cliques.

    Each step takes the current cockade and a fresh copy of H and identifies
    the least k-clique of one with the least k-clique of the other, in index
    order. Fresh vertices get the next free indices.
    """
    if copies < 1:
        raise ValueError("copies must be at least 1")
    base = complete_multipartite(parts)
    base_clique = lex_least_clique(base, k)
    if base_clique is None:
        raise NoKClique(f"K_{{{','.join(map(str, parts))}}} has no clique of size {k}")
    extra_per_copy = base.n - k
    if base.n + (copies - 1) * extra_per_copy > MAX_VERTICES:
        raise TooLarge("cockade would exceed the vertex limit")
    current = base
    for _ in range(copies - 1):
        glue = lex_least_clique(current, k)
        assert glue is not None
        relabel = dict(zip(base_clique, glue))
        fresh = current.n
        for v in range(base.n):
            if v not in relabel:
                relabel[v] = fresh
                fresh += 1
        edges = current.edges() + [(relabel[u], relabel[v]) for u, v in base.edges()]
        current = build_graph(fresh, edges)
    return current


def add_universal_vertices(g: Graph, t: int) -> Graph:
    if g.n + t > MAX_VERTICES:
        raise TooLarge(f"{g.n} + {t} vertices exceeds the limit of {MAX_VERTICES}")
    n = g.n + t
    edges = g.edges() + [(u, v) for v in range(g.n, n) for u in range(v)]
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# connectivity


def universal_vertex_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == g.n - 1)


def is_connected_subset(g: Graph, s: int) -> bool:
    if not s:
        return False
    seen = frontier = s & -s
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen == s


def is_connected(g: Graph) -> bool:
    return g.n == 0 or is_connected_subset(g, g.all_vertices)


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally disjoint s-t paths, stopping once ``cap`` are found.

    Unit-capacity augmenting paths on the split graph: vertex v becomes
    v_in -> v_out, so each internal vertex carries one path.
    """
    # node ids: v_in = 2v, v_out = 2v+1
    flow: dict[tuple[int, int], int] = {}

    def residual(a: int, b: int) -> int:
        return _capacity(a, b) - flow.get((a, b), 0)

    def _capacity(a: int, b: int) -> int:
        va, vb = a >> 1, b >> 1
        if va == vb:
            return 1 if (a & 1) == 0 and (b & 1) == 1 else 0
        if (a & 1) == 1 and (b & 1) == 0 and g.has_edge(va, vb):
            return 1
        return 0

    def out_arcs(a: int) -> Iterator[int]:
        v = a >> 1
        if a & 1 == 0:
            yield 2 * v + 1
            for u in bits(g.adj[v]):
                yield 2 * u + 1  # reverse of u_out -> v_in
        else:
            yield 2 * v  # reverse of v_in -> v_out
            for u in bits(g.adj[v]):
                yield 2 * u

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out_arcs(a):
                if b not in parent and residual(a, b) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            flow[(a, b)] = flow.get((a, b), 0) + 1
            flow[(b, a)] = flow.get((b, a), 0) - 1
            b = a
        total += 1
    return total


def vertex_connectivity(g: Graph) -> int:
    """Largest c such that g is c-connected; K_n gives n-1, disconnected graphs 0."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = g.n - 1
    # a minimum separator T misses one of the first best+1 vertices; taking
    # that vertex as s and scanning every t is enough (Even's argument)
    for s in range(g.n):
        if s > best:
            break
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t, best))
    return best
