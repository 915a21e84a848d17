"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""

from __future__ import annotations

import io
import json
import random
import sys
import time

import pytest

from kempeminor.cli import main
from kempeminor.coloring import Uniqueness, enumerate_partitions, unique_coloring
from kempeminor.extractor import Branch, ExceptionalContradiction, extract_theorem1, extract_unique
from kempeminor.graph import (
    build_cockade,
    complete_multipartite,
    cycle_graph,
    encode_graph6,
    petersen_graph,
    universal_vertex_count,
    vertex_connectivity,
)
from kempeminor.minor import DEFAULT_BUDGET, MinorStatus, find_clique_minor, verify_clique_minor
from kempeminor.verifiers import check_lemma1, check_lemma2, k8_join_p3, kempe_corpus, unique_corpus

from .acceptance_log import record
from .conftest import random_graph
from .oracles import brute_partitions

pytestmark = pytest.mark.acceptance


def as_sets(p):
    return frozenset(frozenset(c) for c in p.to_lists())


@pytest.fixture(scope="module")
def lemma_corpus():
    corpus = kempe_corpus(per_k=24, seed=2026)
    assert len(corpus) >= 200
    return corpus


@pytest.fixture(scope="module")
def theorem2_corpus():
    plain = unique_corpus(ks=range(1, 11), extras=range(5), seeds=(0, 1))
    thinned = unique_corpus(ks=range(1, 11), extras=range(5), seeds=(0, 1), thin=True)
    return plain + thinned


def test_1_exceptional_graphs():
    rows = []
    ok = True
    for parts, n, m, universal in (([2, 2, 2, 3, 3], 12, 57, 0), ([1, 2, 2, 2, 2, 2], 11, 50, 1)):
        g = complete_multipartite(parts)
        start = time.perf_counter()
        result = find_clique_minor(g, 9, DEFAULT_BUDGET)
        seconds = time.perf_counter() - start
        ok &= (g.n, g.m) == (n, m) and g.m == 7 * g.n - 27
        ok &= universal_vertex_count(g) == universal
        ok &= result.status is MinorStatus.NOT_FOUND and seconds <= 60
        rows.append(f"K_{{{','.join(map(str, parts))}}}: n={g.n} m={g.m} univ={universal_vertex_count(g)} "
                    f"K9={result.status.value} ({seconds:.2f}s)")
    record("1 exceptional graphs", ok, "; ".join(rows))
    assert ok


def test_2_cockade_arithmetic():
    start = time.perf_counter()
    ok = True
    rows = []
    for copies in range(1, 5):
        g = build_cockade([1, 2, 2, 2, 2, 2], 6, copies)
        kappa = vertex_connectivity(g)
        # one copy is K_{1,2,2,2,2,2} itself: n minus the largest part
        ok &= g.m == 7 * g.n - 27 and kappa == (9 if copies == 1 else 6)
        rows.append(f"c={copies}: n={g.n} m={g.m} kappa={kappa}")
    seconds = time.perf_counter() - start
    ok &= seconds <= 5
    record("2 cockade arithmetic", ok, f"{'; '.join(rows)} ({seconds:.2f}s)")
    assert ok


def test_3_lemma1(lemma_corpus):
    start = time.perf_counter()
    violations = tight = strict = mismatched = 0
    for g, p in lemma_corpus:
        r = check_lemma1(g, p)
        violations += not r.holds
        mismatched += r.equality != r.all_pairs_trees
        tight += r.equality
        strict += not r.equality
    seconds = time.perf_counter() - start
    ok = violations == 0 and mismatched == 0 and tight > 0 and strict > 0 and seconds <= 60
    record("3 lemma 1", ok, f"{len(lemma_corpus)} instances, {violations} violations, "
                            f"{tight} tight / {strict} strict, {mismatched} iff-mismatches ({seconds:.2f}s)")
    assert ok


def test_4_lemma2(lemma_corpus):
    start = time.perf_counter()
    violations = sum(not check_lemma2(g, p) for g, p in lemma_corpus)
    seconds = time.perf_counter() - start
    ok = violations == 0 and seconds <= 60
    record("4 lemma 2", ok, f"{len(lemma_corpus)} instances, {violations} violations ({seconds:.2f}s)")
    assert ok


def test_5_theorem2_end_to_end(theorem2_corpus):
    start = time.perf_counter()
    branches = {b: 0 for b in Branch}
    failures = contradictions = 0
    k10_seconds = 0.0
    for k, extra, seed, g, p in theorem2_corpus:
        t0 = time.perf_counter()
        try:
            w, trace = extract_unique(g, k)
        except ExceptionalContradiction:
            contradictions += 1
            continue
        if k == 10:
            k10_seconds += time.perf_counter() - t0
        branches[trace.branch_taken] += 1
        failures += not (w.order >= k and verify_clique_minor(g, w))
    g, p = k8_join_p3()
    w, trace = extract_theorem1(g, p, pairs=[(8, 9)])
    branches[trace.branch_taken] += 1
    failures += not (w.order == 10 and verify_clique_minor(g, w))
    covered = all(branches[b] for b in (Branch.CLIQUE_N8, Branch.STAR_CLIQUE, Branch.LIFTED_K9))
    seconds = time.perf_counter() - start
    ok = (len(theorem2_corpus) >= 50 and failures == 0 and contradictions == 0 and covered
          and k10_seconds <= 600)
    counts = ", ".join(f"{b.value}={c}" for b, c in branches.items())
    record("5 theorem 2 end-to-end", ok, f"{len(theorem2_corpus) + 1} runs, {failures} bad witnesses, "
                                         f"{contradictions} contradictions, {counts} ({seconds:.2f}s)")
    assert ok


def test_6_oracle_equivalence():
    start = time.perf_counter()
    rng = random.Random(6)
    disagreements = 0
    graphs = 0
    for _ in range(320):
        g = random_graph(rng, rng.randint(1, 7), rng.choice([0.3, 0.5, 0.7, 0.9]))
        graphs += 1
        for t in range(1, 6):
            fast = find_clique_minor(g, t, mode="pruned")
            slow = find_clique_minor(g, t, mode="exhaustive")
            disagreements += fast.status != slow.status
            if fast.found:
                disagreements += not verify_clique_minor(g, fast.witness)
    petersen = petersen_graph()
    five = find_clique_minor(petersen, 5)
    six = find_clique_minor(petersen, 6)
    seconds = time.perf_counter() - start
    ok = (graphs >= 300 and disagreements == 0 and five.status is MinorStatus.FOUND
          and six.status is MinorStatus.NOT_FOUND and seconds <= 300)
    record("6 oracle equivalence", ok, f"{graphs} graphs x t<=5, {disagreements} disagreements, "
                                       f"Petersen t=5 {five.status.value}, t=6 {six.status.value} ({seconds:.2f}s)")
    assert ok


def test_7_coloring_oracle():
    start = time.perf_counter()
    rng = random.Random(7)
    mismatches = 0
    samples = 220
    for _ in range(samples):
        g = random_graph(rng, rng.randint(0, 6), rng.choice([0.2, 0.4, 0.6, 0.8]))
        for k in range(0, 5):
            got = [as_sets(p) for p in enumerate_partitions(g, k)]
            mismatches += len(got) != len(set(got)) or set(got) != brute_partitions(g, k)
    c5 = len(list(enumerate_partitions(cycle_graph(5), 3)))
    c5_unique = unique_coloring(cycle_graph(5), 3).status
    seconds = time.perf_counter() - start
    ok = mismatches == 0 and c5 == 5 and c5_unique is Uniqueness.MULTIPLE and seconds <= 120
    record("7 coloring oracle", ok, f"{samples} graphs x k<=4, {mismatches} mismatches, C_5: {c5} partitions, "
                                    f"{c5_unique.value} ({seconds:.2f}s)")
    assert ok


def test_8_certificate_roundtrip(theorem2_corpus, tmp_path, monkeypatch, capsys):
    emitted = verified = 0
    for i, (k, extra, seed, g, p) in enumerate(theorem2_corpus):
        path = tmp_path / f"cert{i}.json"
        monkeypatch.setattr(sys, "stdin", io.StringIO(encode_graph6(g) + "\n"))
        code = main(["extract", "-k", str(k), "--seed", str(seed), "--output", str(path)])
        capsys.readouterr()
        if code != 0:
            continue
        emitted += 1
        code = main(["check", "--certificate", str(path)])
        report = json.loads(capsys.readouterr().out)
        verified += code == 0 and report["verified"]
    ok = emitted == len(theorem2_corpus) and verified == emitted
    record("8 certificate round-trip", ok, f"{verified}/{emitted} certificates re-verified")
    assert ok
