"""Clique minors of order k from Kempe-colorings of order k <= 10.

``extract_theorem1`` follows the order-10 case analysis: fix two classes A
and B, look at what remains, and build the witness from a clique on the
remainder, a star around a leaf z of a spanning tree of G[A u B], or a
K_9 minor of G' + xy lifted back through z. ``extract_unique`` pads smaller
colorings up to order 10 with universal vertices and strips them again.
"""

from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Partition, Uniqueness, check_partition, unique_coloring, verify_partition
from .graph import (
    Graph,
    add_universal_vertices,
    bits,
    encode_graph6,
    lowest,
    universal_vertex_count,
    vertex_connectivity,
)
from .minor import (
    DEFAULT_BUDGET,
    MinorStatus,
    MinorWitness,
    SearchBudget,
    find_clique_minor,
    verify_clique_minor,
)
from .verifiers import NotKempe, exceptional_match

log = logging.getLogger(__name__)


class Branch(enum.Enum):
    CLIQUE_N8 = "CliqueN8"
    STAR_CLIQUE = "StarClique"
    LIFTED_K9 = "LiftedK9"
    EXCEPTIONAL = "ExceptionalContradiction"


@dataclass
class ExtractionTrace:
    chosen_classes: tuple[int, int] | None = None
    reduced_vertices: list[int] = field(default_factory=list)
    reduced_graph: Graph | None = None
    n_prime: int | None = None
    branch_taken: Branch | None = None
    z: int | None = None
    star_neighbors: list[int] = field(default_factory=list)
    xy: tuple[int, int] | None = None
    lifted_from: MinorWitness | None = None
    padding_added: list[int] = field(default_factory=list)
    search_nodes: int = 0
    skipped_pairs: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "chosen_classes": list(self.chosen_classes) if self.chosen_classes else None,
            "reduced_vertices": self.reduced_vertices,
            "reduced_graph": encode_graph6(self.reduced_graph) if self.reduced_graph else None,
            "n_prime": self.n_prime,
            "branch_taken": self.branch_taken.value if self.branch_taken else None,
            "z": self.z,
            "star_neighbors": self.star_neighbors,
            "xy": list(self.xy) if self.xy else None,
            "lifted_from": self.lifted_from.to_lists() if self.lifted_from else None,
            "padding_added": self.padding_added,
            "search_nodes": self.search_nodes,
            "skipped_pairs": [list(p) for p in self.skipped_pairs],
        }


class ExtractionError(Exception):
    def __init__(self, message: str, trace: ExtractionTrace | None = None):
        super().__init__(message)
        self.trace = trace


class OrderTooHigh(ExtractionError):
    pass


class WrongOrder(ExtractionError):
    pass


class NotUnique(ExtractionError):
    def __init__(self, message: str, status: Uniqueness):
        super().__init__(message)
        self.status = status


class BudgetExceeded(ExtractionError):
    pass


class ExceptionalContradiction(ExtractionError):
    def __init__(self, message: str, trace: ExtractionTrace, diagnostics: ContradictionReport):
        super().__init__(message, trace)
        self.diagnostics = diagnostics


# ---------------------------------------------------------------------------


def pad_to_ten(g: Graph, p: Partition) -> tuple[Graph, Partition, list[int]]:
    report = verify_partition(g, p)
    if not report.kempe:
        raise NotKempe(report.reason or "partition is not a Kempe-coloring")
    k = len(p)
    if k > 10:
        raise OrderTooHigh(f"Kempe-coloring has order {k} > 10")
    added = list(range(g.n, g.n + 10 - k))
    padded = add_universal_vertices(g, 10 - k)
    return padded, Partition.of_masks(list(p.classes) + [1 << a for a in added]), added


@dataclass
class ContradictionReport:
    n_prime: int
    edges: int
    edge_bound: int
    connectivity: int
    singleton_classes: int
    universal_count: int
    exceptional_match: str | None
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n_prime": self.n_prime,
            "edges": self.edges,
            "edge_bound": self.edge_bound,
            "connectivity": self.connectivity,
            "singleton_classes": self.singleton_classes,
            "universal_count": self.universal_count,
            "exceptional_match": self.exceptional_match,
            "failures": self.failures,
        }


def contradiction_diagnostics(g_prime_xy: Graph, n_prime: int, p_prime: Partition) -> ContradictionReport:
    """Re-derive each consequence of "G' + xy has no K_9 minor" and list every one that fails.

    On genuine input at least one always fails, because together they are
    contradictory; which ones fail says where the input or the code went wrong.
    """
    check_partition(g_prime_xy, p_prime)
    g = g_prime_xy
    bound = 7 * n_prime - 27
    kappa = vertex_connectivity(g)
    singles = sum(1 for c in p_prime.classes if c.bit_count() == 1)
    universal = universal_vertex_count(g)
    match = exceptional_match(g)
    failures = []
    if g.n != n_prime:
        failures.append(f"graph has {g.n} vertices but n' = {n_prime}")
    if len(p_prime) != 8:
        failures.append(f"reduced coloring has order {len(p_prime)}, expected 8")
    if n_prime < 9:
        failures.append(f"n' = {n_prime} < 9, the clique case should have applied")
    if g.m < bound:
        failures.append(f"edge count {g.m} < 7n' - 27 = {bound}")
    if kappa < 7:
        failures.append(f"vertex connectivity {kappa} < 7")
    if match is None:
        failures.append("graph is neither K_{2,2,2,3,3} nor a (K_{1,2,2,2,2,2},6)-cockade")
    elif match == "Cockade" and g.n != 11:
        failures.append(f"cockade on {g.n} vertices has a 6-cutset, contradicting 7-connectivity")
    if n_prime not in (11, 12):
        failures.append(f"n' = {n_prime} is not 11 or 12")
    if singles < 16 - n_prime:
        failures.append(f"singleton classes {singles} < 16 - n' = {16 - n_prime}")
    if universal < 16 - n_prime:
        failures.append(f"universal vertices {universal} < 16 - n' = {16 - n_prime}")
    exceptional_universal = {"K22233": 0, "Cockade": 1}.get(match or "")
    if exceptional_universal is not None and universal != exceptional_universal:
        failures.append(f"{match} should have {exceptional_universal} universal vertices, found {universal}")
    return ContradictionReport(n_prime, g.m, bound, kappa, singles, universal, match, failures)


# ---------------------------------------------------------------------------


def _spanning_tree_leaf(g: Graph, s: int) -> int:
    """Lowest-indexed leaf of the BFS tree of G[s] rooted at its lowest vertex."""
    root = lowest(s)
    tree_degree = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & s):
            if u not in tree_degree:
                tree_degree[u] = 1
                tree_degree[v] += 1
                queue.append(u)
    if len(tree_degree) != s.bit_count():
        raise NotKempe("two classes induce a disconnected graph")
    return min(v for v, d in tree_degree.items() if d == 1)


def _absorb(g: Graph, sets: list[int], x: int) -> list[int]:
    """Grow a branch set along a shortest path of unused vertices until it contains x."""
    used = 0
    for s in sets:
        used |= s
    if used >> x & 1:
        return sets
    parent = {x: x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        touching = [i for i, s in enumerate(sets) if g.adj[v] & s]
        if touching:
            path = 0
            while True:
                path |= 1 << v
                if v == x:
                    break
                v = parent[v]
            out = list(sets)
            out[touching[0]] |= path
            return out
        for u in bits(g.adj[v] & ~used):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    raise AssertionError("G' + xy is disconnected")


def _relabel(mask: int, labels: list[int]) -> int:
    return sum(1 << labels[i] for i in bits(mask))


def _run_pair(g: Graph, p: Partition, i: int, j: int, budget: SearchBudget) -> tuple[MinorWitness, ExtractionTrace]:
    a_cls, b_cls = p.classes[i], p.classes[j]
    both = a_cls | b_cls
    rest = g.all_vertices & ~both
    others = [c for k, c in enumerate(p.classes) if k not in (i, j)]
    trace = ExtractionTrace(chosen_classes=(i, j), reduced_vertices=list(bits(rest)), n_prime=rest.bit_count())
    trace.reduced_graph, labels = g.subgraph(rest)

    if trace.n_prime == 8:
        a, b = next((u, v) for u in bits(both) for v in bits(g.adj[u] & both) if u < v)
        trace.branch_taken = Branch.CLIQUE_N8
        return MinorWitness.canonical([1 << v for v in bits(rest)] + [1 << a, 1 << b]), trace

    z = _spanning_tree_leaf(g, both)
    if b_cls >> z & 1:
        i, j = j, i
        trace.chosen_classes = (i, j)
    trace.z = z
    x_c = [lowest(g.adj[z] & c) for c in others]
    trace.star_neighbors = x_c
    tail = both & ~(1 << z)
    if all(g.has_edge(u, v) for u, v in combinations(x_c, 2)):
        trace.branch_taken = Branch.STAR_CLIQUE
        return MinorWitness.canonical([1 << v for v in x_c] + [1 << z, tail]), trace

    near = list(bits(g.adj[z] & rest))
    x, y = next((u, v) for u, v in combinations(near, 2) if not g.has_edge(u, v))
    trace.xy = (x, y)
    reduced = trace.reduced_graph
    index = {v: k for k, v in enumerate(labels)}
    plus = reduced.with_edge(index[x], index[y])
    result = find_clique_minor(plus, 9, budget)
    trace.search_nodes = result.nodes
    if result.status is MinorStatus.BUDGET_EXCEEDED:
        raise BudgetExceeded(f"K_9 search in G' + xy exceeded the budget after {result.nodes} nodes", trace)
    if result.status is MinorStatus.NOT_FOUND:
        trace.branch_taken = Branch.EXCEPTIONAL
        p_prime = Partition.of_masks(sum(1 << index[v] for v in bits(c)) for c in others)
        diag = contradiction_diagnostics(plus, trace.n_prime, p_prime)
        raise ExceptionalContradiction(
            "G' + xy has no K_9 minor; input is not a Kempe-coloring or the code is wrong: "
            + "; ".join(diag.failures),
            trace,
            diag,
        )
    assert result.witness is not None
    trace.lifted_from = MinorWitness(tuple(_relabel(s, labels) for s in result.witness.branch_sets))
    sets = _absorb(plus, list(result.witness.branch_sets), index[x])
    sets = [_relabel(s, labels) for s in sets]
    q = next(k for k, s in enumerate(sets) if s >> x & 1)
    sets[q] |= 1 << z
    trace.branch_taken = Branch.LIFTED_K9
    return MinorWitness.canonical(sets + [tail]), trace


def extract_theorem1(
    g: Graph,
    p: Partition,
    budget: SearchBudget = DEFAULT_BUDGET,
    pairs: list[tuple[int, int]] | None = None,
) -> tuple[MinorWitness, ExtractionTrace]:
    """Order-10 clique minor from a Kempe-coloring of order 10.

    Class pairs are tried in ``pairs`` order (canonical order by default) and
    the first one whose K_9 search finishes within ``budget`` is used.
    """
    report = verify_partition(g, p)
    if not report.kempe:
        raise NotKempe(report.reason or "partition is not a Kempe-coloring")
    if len(p) != 10:
        raise WrongOrder(f"Kempe-coloring has order {len(p)}, expected 10")
    skipped: list[tuple[int, int]] = []
    last: BudgetExceeded | None = None
    for i, j in pairs or list(combinations(range(10), 2)):
        if not 0 <= i < 10 or not 0 <= j < 10 or i == j:
            raise ValueError(f"bad class pair ({i}, {j})")
        try:
            witness, trace = _run_pair(g, p, i, j, budget)
        except BudgetExceeded as exc:
            log.info("class pair (%d, %d) ran out of budget, trying the next pair", i, j)
            skipped.append((i, j))
            last = exc
            continue
        trace.skipped_pairs = skipped
        check = verify_clique_minor(g, witness)
        if not check or witness.order != 10:
            raise AssertionError(f"branch {trace.branch_taken} built an invalid witness: {check.violation}")
        return witness, trace
    assert last is not None
    if last.trace is not None:
        last.trace.skipped_pairs = skipped
    raise BudgetExceeded("every class pair exceeded the search budget", last.trace)


def extract_unique(
    g: Graph,
    k: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[MinorWitness, ExtractionTrace]:
    """Clique minor of order >= k in a graph with chromatic number k and a unique k-coloring."""
    if k > 10:
        raise OrderTooHigh(f"k = {k} > 10")
    coloring = unique_coloring(g, k)
    if coloring.status is not Uniqueness.UNIQUE:
        raise NotUnique(f"graph has {coloring.status.value} {k}-colorings", coloring.status)
    p = coloring.partition
    assert p is not None
    if len(p) != k:
        raise WrongOrder(f"unique {k}-coloring uses {len(p)} classes; chromatic number is below {k}")
    padded, p_plus, added = pad_to_ten(g, p)
    witness, trace = extract_theorem1(padded, p_plus, budget)
    trace.padding_added = added
    pad_mask = sum(1 << a for a in added)
    kept = [s for s in witness.branch_sets if not s & pad_mask]
    stripped = MinorWitness.canonical(kept)
    if stripped.order < k or not verify_clique_minor(g, stripped):
        raise AssertionError("stripping the padding left an invalid witness")
    return stripped, trace
