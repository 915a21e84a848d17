#!/usr/bin/env python3
"""Edge counts, universal vertices, connectivity and K_9-minor status for the
two exceptional families and a few K_9-minor-bearing controls."""

import argparse
import time

from kempeminor.graph import build_cockade, complete_graph, complete_multipartite, universal_vertex_count, vertex_connectivity
from kempeminor.minor import SearchBudget
from kempeminor.verifiers import classify_theorem0, exceptional_match


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-copies", type=int, default=4)
    parser.add_argument("--search-copies", type=int, default=4,
                        help="run the K_9 search on cockades up to this many copies")
    parser.add_argument("--timeout-ms", type=int, default=60_000)
    args = parser.parse_args()
    budget = SearchBudget(time_limit_ms=args.timeout_ms)

    cases = [("K_{2,2,2,3,3}", complete_multipartite([2, 2, 2, 3, 3]), True)]
    for c in range(1, args.max_copies + 1):
        cases.append((f"cockade x{c}", build_cockade([1, 2, 2, 2, 2, 2], 6, c), c <= args.search_copies))
    cases.append(("K_12", complete_graph(12), True))

    print(f"{'graph':<16}{'n':>4}{'m':>6}{'7n-27':>7}{'univ':>6}{'kappa':>7}  {'K_9 minor':<16}{'match':<9}{'sec':>7}")
    for name, g, search in cases:
        start = time.perf_counter()
        if search:
            report = classify_theorem0(g, budget)
            k9, match = report.k9.value, report.exceptional_match or "-"
        else:
            k9, match = "skipped", exceptional_match(g) or "-"
        seconds = time.perf_counter() - start
        print(f"{name:<16}{g.n:>4}{g.m:>6}{7 * g.n - 27:>7}{universal_vertex_count(g):>6}"
              f"{vertex_connectivity(g):>7}  {k9:<16}{match:<9}{seconds:>7.2f}")


if __name__ == "__main__":
    main()
