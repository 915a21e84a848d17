"""Brute-force reference computations, deliberately naive and independent of the package."""

from __future__ import annotations

from itertools import combinations, product

from kempeminor.graph import Graph


def _components(g: Graph, alive: set[int]) -> int:
    seen: set[int] = set()
    count = 0
    for s in alive:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in alive:
                if u not in seen and g.adj[v] >> u & 1:
                    seen.add(u)
                    stack.append(u)
    return count


def brute_connectivity(g: Graph) -> int:
    """Smallest separating set, or n-1 when no set separates (complete graphs)."""
    n = g.n
    if n <= 1:
        return 0
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            alive = set(range(n)) - set(cut)
            if _components(g, alive) > 1:
                return size
    return n - 1


def brute_partitions(g: Graph, k: int) -> set[frozenset[frozenset[int]]]:
    """Proper partitions into at most k anticliques via all k^n labelings."""
    out = set()
    for labels in product(range(k), repeat=g.n):
        if any(labels[u] == labels[v] for u, v in g.edges()):
            continue
        classes: dict[int, set[int]] = {}
        for v, c in enumerate(labels):
            classes.setdefault(c, set()).add(v)
        out.add(frozenset(frozenset(c) for c in classes.values()))
    if g.n == 0 and k >= 0:
        out.add(frozenset())
    return out


def brute_max_clique(g: Graph) -> int:
    best = 0
    for size in range(g.n + 1):
        if any(all(g.adj[u] >> v & 1 for u, v in combinations(c, 2)) for c in combinations(range(g.n), size)):
            best = size
    return best
