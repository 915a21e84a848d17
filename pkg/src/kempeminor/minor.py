"""Clique minors: witness checking and two exact searches.

``pruned`` first splits the graph along clique separators (a K_t minor of a
clique-sum lives in one of its sides), then searches over minors directly.
A state is a set of pairwise disjoint connected vertex sets (the current
minor's vertices). Moves are contracting two adjacent sets or dropping a
single original vertex, and failed states are memoised.

``exhaustive`` enumerates every assignment of vertices to t branch sets or
to "unused", modulo relabelling the branch sets, and checks each one. The two share nothing except ``verify_clique_minor``.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, bits, is_connected_subset, lowest, mask_of


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = 10**8
    time_limit_ms: int = 60_000

    def __post_init__(self) -> None:
        if self.node_limit <= 0 or self.time_limit_ms <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class MinorWitness:
    branch_sets: tuple[int, ...]

    @classmethod
    def from_lists(cls, sets: Iterable[Iterable[int]]) -> MinorWitness:
        return cls(tuple(mask_of(s) for s in sets))

    @classmethod
    def canonical(cls, sets: Iterable[int]) -> MinorWitness:
        return cls(tuple(sorted(sets, key=lowest)))

    @property
    def order(self) -> int:
        return len(self.branch_sets)

    def to_lists(self) -> list[list[int]]:
        return [list(bits(s)) for s in self.branch_sets]


@dataclass(frozen=True)
class MinorCheck:
    ok: bool
    violation: str = ""
    detail: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_clique_minor(g: Graph, w: MinorWitness) -> MinorCheck:
    sets = w.branch_sets
    seen = 0
    for i, s in enumerate(sets):
        if s == 0:
            return MinorCheck(False, "branch set empty", (i,))
        if s >> g.n:
            return MinorCheck(False, "branch set not in graph", (i,))
        if s & seen:
            return MinorCheck(False, "branch sets overlap", (i, lowest(s & seen)))
        seen |= s
    for i, s in enumerate(sets):
        if not is_connected_subset(g, s):
            return MinorCheck(False, "branch set not connected", (i,))
    reach = [g.neighbours_of_set(s) for s in sets]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not reach[i] & sets[j]:
                return MinorCheck(False, "pair not adjacent", (i, j))
    return MinorCheck(True)


class MinorStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass
class SearchResult:
    status: MinorStatus
    witness: MinorWitness | None = None
    nodes: int = 0
    elapsed_ms: float = 0.0

    @property
    def found(self) -> bool:
        return self.status is MinorStatus.FOUND


class _OutOfBudget(Exception):
    pass


@dataclass
class _Meter:
    budget: SearchBudget
    nodes: int = 0
    start: float = field(default_factory=time.monotonic)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _OutOfBudget
        if self.nodes & 1023 == 0 and self.elapsed_ms() > self.budget.time_limit_ms:
            raise _OutOfBudget

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self.start) * 1000.0


def find_clique_minor(
    g: Graph,
    t: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    mode: str = "pruned",
) -> SearchResult:
    if t < 1:
        raise ValueError("t must be at least 1")
    if mode not in ("pruned", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    meter = _Meter(budget)
    search = _split if mode == "pruned" else _exhaustive
    try:
        sets = search(g, t, meter)
    except _OutOfBudget:
        return SearchResult(MinorStatus.BUDGET_EXCEEDED, None, meter.nodes, meter.elapsed_ms())
    if sets is None:
        return SearchResult(MinorStatus.NOT_FOUND, None, meter.nodes, meter.elapsed_ms())
    witness = MinorWitness.canonical(sets)
    check = verify_clique_minor(g, witness)
    if not check:
        raise AssertionError(f"search produced an invalid witness: {check.violation}")
    return SearchResult(MinorStatus.FOUND, witness, meter.nodes, meter.elapsed_ms())


# ---------------------------------------------------------------------------
# clique separators


def _clique_separator(g: Graph, meter: _Meter) -> int | None:
    """Some clique (possibly empty) whose removal disconnects g, as a bitset."""
    everything = g.all_vertices

    def separates(c: int) -> bool:
        rest = everything & ~c
        return bool(rest) and not is_connected_subset(g, rest)

    if separates(0):
        return 0

    def grow(clique: int, cand: int) -> int | None:
        for v in bits(cand):
            meter.tick()
            bigger = clique | 1 << v
            if separates(bigger):
                return bigger
            hit = grow(bigger, cand & g.adj[v] & ~((2 << v) - 1))
            if hit is not None:
                return hit
        return None

    return grow(0, everything)


def _split(g: Graph, t: int, meter: _Meter) -> tuple[int, ...] | None:
    if g.n <= t:
        return _pruned(g, t, meter)
    sep = _clique_separator(g, meter)
    if sep is None:
        return _pruned(g, t, meter)
    rest = g.all_vertices & ~sep
    while rest:
        comp = _component_of(g, lowest(rest), rest)
        rest &= ~comp
        side, labels = g.subgraph(comp | sep)
        hit = _split(side, t, meter)
        if hit is not None:
            return tuple(sum(1 << labels[i] for i in bits(s)) for s in hit)
    return None


def _component_of(g: Graph, v: int, within: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


# ---------------------------------------------------------------------------
# contraction search


def _pruned(g: Graph, t: int, meter: _Meter) -> tuple[int, ...] | None:
    need_edges = t * (t - 1) // 2
    failed: set[tuple[int, ...]] = set()

    def visit(parts: tuple[int, ...]) -> tuple[int, ...] | None:
        if parts in failed:
            return None
        meter.tick()
        size = len(parts)
        spare = size - t
        if spare < 0:
            return None
        reach = [g.neighbours_of_set(p) for p in parts]
        # padj[i]: bitset over part indices adjacent to part i
        padj = [0] * size
        for i in range(size):
            r = reach[i]
            for j in range(i + 1, size):
                if r & parts[j]:
                    padj[i] |= 1 << j
                    padj[j] |= 1 << i
        deg = [a.bit_count() for a in padj]
        edges = sum(deg) // 2
        if edges < need_edges:
            failed.add(parts)
            return None
        low = sum(1 for d in deg if d < t - 1)
        if spare == 0:
            if low == 0:
                return parts
            failed.add(parts)
            return None
        # a part of degree < t-1 is either dropped or merged into a larger branch set,
        # and each of the `spare` remaining moves absorbs at most two such parts
        if low > 2 * spare:
            failed.add(parts)
            return None
        hit = _clique_among(padj, t, deg)
        if hit is not None:
            return tuple(parts[i] for i in bits(hit))

        moves: list[tuple[int, int, int]] = []
        for i in range(size):
            for j in bits(padj[i] >> (i + 1) << (i + 1)):
                moves.append((1 + (padj[i] & padj[j]).bit_count(), i, j))
            if parts[i] & (parts[i] - 1) == 0:
                moves.append((deg[i], i, -1))
        moves.sort()
        for _, i, j in moves:
            if j < 0:
                child = parts[:i] + parts[i + 1:]
            else:
                merged = parts[i] | parts[j]
                rest = [p for k, p in enumerate(parts) if k != i and k != j]
                child = tuple(sorted(rest + [merged], key=lowest))
            hit_parts = visit(child)
            if hit_parts is not None:
                return hit_parts
        failed.add(parts)
        return None

    start = tuple(1 << v for v in range(g.n))
    return visit(start)


def _clique_among(padj: list[int], t: int, deg: list[int]) -> int | None:
    """Bitset of t mutually adjacent parts, or None."""
    pool = 0
    for i, d in enumerate(deg):
        if d >= t - 1:
            pool |= 1 << i
    if pool.bit_count() < t:
        return None

    def grow(chosen: int, size: int, cand: int) -> int | None:
        if size == t:
            return chosen
        if size + cand.bit_count() < t:
            return None
        for v in bits(cand):
            cand &= ~(1 << v)
            hit = grow(chosen | 1 << v, size + 1, cand & padj[v])
            if hit is not None:
                return hit
            if size + cand.bit_count() < t:
                return None
        return None

    return grow(0, 0, pool)


# ---------------------------------------------------------------------------
# brute-force oracle


def _exhaustive(g: Graph, t: int, meter: _Meter) -> tuple[int, ...] | None:
    n = g.n
    sets: list[int] = []

    def check() -> bool:
        if any(not is_connected_subset(g, s) for s in sets):
            return False
        reach = [g.neighbours_of_set(s) for s in sets]
        return all(reach[i] & sets[j] for i in range(t) for j in range(i + 1, t))

    def assign(v: int) -> tuple[int, ...] | None:
        meter.tick()
        if n - v < t - len(sets):
            return None
        if v == n:
            return tuple(sets) if check() else None
        hit = assign(v + 1)  # v unused
        if hit is not None:
            return hit
        for i in range(len(sets)):
            sets[i] |= 1 << v
            hit = assign(v + 1)
            sets[i] &= ~(1 << v)
            if hit is not None:
                return hit
        if len(sets) < t:
            sets.append(1 << v)
            hit = assign(v + 1)
            sets.pop()
            if hit is not None:
                return hit
        return None

    return assign(0)
