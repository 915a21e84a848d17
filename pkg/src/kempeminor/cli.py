"""Command-line front end.

Exit codes: 0 verified, 1 property false, 2 malformed input, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from .certificates import CertificateError, make_certificate, verify_certificate
from .coloring import NotAPartition, Partition, unique_coloring, verify_partition
from .extractor import (
    BudgetExceeded,
    ExceptionalContradiction,
    ExtractionError,
    NotUnique,
    extract_unique,
    pad_to_ten,
)
from .graph import (
    Graph,
    GraphError,
    build_cockade,
    complete_multipartite,
    decode_edgelist,
    decode_graph6,
    encode_edgelist,
    encode_graph6,
    vertex_connectivity,
)
from .minor import MinorWitness, SearchBudget, verify_clique_minor
from .verifiers import NotKempe, TooSmall, check_lemma1, classify_theorem0, generate_uniquely_colorable

EXIT_OK, EXIT_FALSE, EXIT_MALFORMED, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("kempeminor")


class Malformed(Exception):
    pass


def _read_graph(source: str, fmt: str) -> Graph:
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
    except OSError as exc:
        raise Malformed(f"cannot read {source}: {exc}") from exc
    try:
        if fmt == "edgelist":
            return decode_edgelist(text)
        lines = [line for line in text.splitlines() if line.strip()]
        return decode_graph6(lines[0] if lines else "")
    except GraphError as exc:
        raise Malformed(str(exc)) from exc


def _json_arg(text: str, what: str) -> list[list[int]]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise Malformed(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(value, list) or not all(
        isinstance(s, list) and all(isinstance(v, int) and v >= 0 for v in s) for s in value
    ):
        raise Malformed(f"{what} must be a JSON list of lists of vertex indices")
    return value


def _parts_arg(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise Malformed(f"bad part list {text!r}") from exc


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(node_limit=args.node_limit, time_limit_ms=args.timeout_ms)


def _emit(args: argparse.Namespace, obj: Any) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    if args.certificate:
        try:
            with open(args.certificate) as fh:
                cert = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise Malformed(f"cannot load certificate: {exc}") from exc
        try:
            result = verify_certificate(cert)
        except CertificateError as exc:
            raise Malformed(str(exc)) from exc
        _emit(args, {"kind": result.kind, "verified": result.ok, "reason": result.reason})
        return EXIT_OK if result else EXIT_FALSE

    g = _read_graph(args.input, args.format)
    if args.minor is not None:
        w = MinorWitness.from_lists(_json_arg(args.minor, "--minor"))
        if any(s >> g.n for s in w.branch_sets):
            raise Malformed("branch set mentions a vertex outside the graph")
        check = verify_clique_minor(g, w)
        ok = check.ok
        report = {"check": "minor", "verified": ok, "order": w.order, "reason": check.violation,
                  "detail": list(check.detail)}
        kind, payload = "clique-minor", {"branch_sets": w.to_lists()}
    else:
        flag, text = next((f, getattr(args, f)) for f in ("coloring", "kempe", "lemma1", "lemma2")
                          if getattr(args, f) is not None)
        p = Partition.from_lists(_json_arg(text, f"--{flag}"))
        kempe = verify_partition(g, p)
        payload = {"partition": p.to_lists()}
        if flag == "coloring":
            ok, kind = kempe.proper, None
            report = {"check": flag, "verified": ok, **kempe.to_json()}
        elif flag == "kempe":
            ok, kind = kempe.kempe, "kempe-coloring"
            report = {"check": flag, "verified": ok, **kempe.to_json()}
        elif not kempe.kempe:
            ok, kind = False, None
            report = {"check": flag, "verified": False, "reason": kempe.reason or "not a Kempe-coloring"}
        elif flag == "lemma1":
            lemma = check_lemma1(g, p).to_json()
            ok = lemma["holds"] and lemma["equality"] == lemma["all_pairs_trees"]
            kind, payload["report"] = "lemma1", lemma
            report = {"check": flag, "verified": ok, **lemma}
        else:
            kappa = vertex_connectivity(g)
            ok = kappa >= len(p) - 1
            kind, payload["connectivity"] = "lemma2", kappa
            report = {"check": flag, "verified": ok, "connectivity": kappa, "required": len(p) - 1}
    if args.emit_certificate and ok and kind:
        _emit(args, make_certificate(kind, g, payload))
    else:
        _emit(args, report)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_extract(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    if not 1 <= args.k <= 10:
        raise Malformed(f"k must be between 1 and 10, got {args.k}")
    try:
        witness, trace = extract_unique(g, args.k, _budget(args))
    except NotUnique as exc:
        _emit(args, {"status": exc.status.value, "reason": str(exc)})
        return EXIT_FALSE
    except BudgetExceeded as exc:
        _emit(args, {"status": "budget_exceeded", "reason": str(exc),
                     "trace": exc.trace.to_json() if exc.trace else None})
        return EXIT_BUDGET
    except ExceptionalContradiction as exc:
        _emit(args, {"status": "exceptional_contradiction", "reason": str(exc),
                     "diagnostics": exc.diagnostics.to_json(), "trace": exc.trace.to_json()})
        return EXIT_FALSE
    except (ExtractionError, NotKempe) as exc:
        _emit(args, {"status": "rejected", "reason": str(exc)})
        return EXIT_FALSE
    partition = unique_coloring(g, args.k).partition
    assert partition is not None
    payload = {"k": args.k, "partition": partition.to_lists(), "witness": witness.to_lists(),
               "order": witness.order, "trace": trace.to_json()}
    _emit(args, make_certificate("extraction", g, payload, seed=args.seed))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    partition: Partition | None = None
    try:
        if args.family == "multipartite":
            g = complete_multipartite(_parts_arg(args.parts or ""))
        elif args.family == "cockade":
            g = build_cockade(_parts_arg(args.parts or ""), args.k, args.copies)
        elif args.family in ("unique", "padded"):
            g, partition = generate_uniquely_colorable(args.k, args.extra, args.seed or 0)
            if args.family == "padded":
                g, partition, _ = pad_to_ten(g, partition)
        else:
            raise Malformed(f"unknown family {args.family!r}")
    except (GraphError, ValueError) as exc:
        raise Malformed(str(exc)) from exc
    text = encode_edgelist(g) if args.format == "edgelist" else encode_graph6(g) + "\n"
    if partition is not None:
        text += json.dumps(partition.to_lists()) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    try:
        report = classify_theorem0(g, _budget(args))
    except TooSmall as exc:
        raise Malformed(str(exc)) from exc
    _emit(args, report.to_json())
    return EXIT_BUDGET if report.k9.value == "budget_exceeded" else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--timeout-ms", type=int, default=60_000)
    common.add_argument("--node-limit", type=int, default=10**8)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--output", default=None, help="write to FILE instead of standard output")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="kempeminor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="verify a coloring, minor, lemma or certificate")
    check.add_argument("input", nargs="?", default="-")
    what = check.add_mutually_exclusive_group(required=True)
    for flag in ("coloring", "kempe", "lemma1", "lemma2"):
        what.add_argument(f"--{flag}", metavar="PARTITION", help="JSON list of classes")
    what.add_argument("--minor", metavar="BRANCH_SETS", help="JSON list of branch sets")
    what.add_argument("--certificate", metavar="FILE")
    check.add_argument("--emit-certificate", action="store_true",
                       help="print a certificate instead of the report when the check passes")
    check.set_defaults(func=cmd_check)

    extract = sub.add_parser("extract", parents=[common], help="clique minor from a unique k-coloring")
    extract.add_argument("input", nargs="?", default="-")
    extract.add_argument("-k", type=int, required=True)
    extract.set_defaults(func=cmd_extract)

    gen = sub.add_parser("gen", parents=[common], help="generate a graph family")
    gen.add_argument("family", choices=("multipartite", "cockade", "unique", "padded"))
    gen.add_argument("parts", nargs="?", help="comma-separated part sizes")
    gen.add_argument("--k", type=int, default=6)
    gen.add_argument("--copies", type=int, default=1)
    gen.add_argument("--extra", type=int, default=0)
    gen.set_defaults(func=cmd_gen)

    classify = sub.add_parser("classify", parents=[common], help="K_9 minor and exceptional-graph test")
    classify.add_argument("input", nargs="?", default="-")
    classify.set_defaults(func=cmd_classify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (Malformed, NotAPartition, GraphError) as exc:
        print(f"kempeminor: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"kempeminor: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
