"""Self-contained JSON certificates that re-verify against their embedded graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .coloring import NotAPartition, Partition, Uniqueness, unique_coloring, verify_partition
from .graph import GraphError, decode_graph6, encode_graph6, Graph, vertex_connectivity
from .minor import MinorWitness, verify_clique_minor
from .verifiers import check_lemma1

TOOL_VERSION = "kempeminor 0.1.0"
KINDS = ("kempe-coloring", "clique-minor", "lemma1", "lemma2", "extraction")


class CertificateError(ValueError):
    """The certificate is structurally malformed (as opposed to making a false claim)."""


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    kind: str
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def make_certificate(kind: str, g: Graph, payload: dict[str, Any], seed: int | None = None) -> dict[str, Any]:
    if kind not in KINDS:
        raise ValueError(f"unknown certificate kind {kind!r}")
    return {
        "graph": encode_graph6(g),
        "kind": kind,
        "payload": payload,
        "tool_version": TOOL_VERSION,
        "seed": seed,
    }


def _partition(payload: dict, key: str = "partition") -> Partition:
    try:
        return Partition.from_lists(payload[key])
    except (KeyError, TypeError, NotAPartition) as exc:
        raise CertificateError(f"bad {key!r} field: {exc}") from exc


def _witness(payload: dict, key: str) -> MinorWitness:
    try:
        return MinorWitness.from_lists(payload[key])
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"bad {key!r} field: {exc}") from exc


def verify_certificate(cert: Any) -> CertificateCheck:
    if not isinstance(cert, dict) or not isinstance(cert.get("payload"), dict):
        raise CertificateError("certificate must be an object with a payload object")
    kind = cert.get("kind")
    if kind not in KINDS:
        raise CertificateError(f"unknown certificate kind {kind!r}")
    try:
        g = decode_graph6(str(cert.get("graph", "")))
    except GraphError as exc:
        raise CertificateError(f"bad graph: {exc}") from exc
    payload = cert["payload"]

    try:
        if kind == "clique-minor":
            check = verify_clique_minor(g, _witness(payload, "branch_sets"))
            return CertificateCheck(check.ok, kind, check.violation)

        p = _partition(payload)
        report = verify_partition(g, p)
        if kind == "kempe-coloring":
            return CertificateCheck(report.kempe, kind, report.reason)
        if not report.kempe:
            return CertificateCheck(False, kind, report.reason or "partition is not a Kempe-coloring")

        if kind == "lemma1":
            fresh = check_lemma1(g, p).to_json()
            claimed = payload.get("report")
            if claimed is not None and _normalise(claimed) != _normalise(fresh):
                return CertificateCheck(False, kind, "claimed report differs from recomputation")
            ok = fresh["holds"] and fresh["equality"] == fresh["all_pairs_trees"]
            return CertificateCheck(ok, kind, "" if ok else "edge bound or its tree condition fails")

        if kind == "lemma2":
            kappa = vertex_connectivity(g)
            if "connectivity" in payload and payload["connectivity"] != kappa:
                return CertificateCheck(False, kind, f"claimed connectivity {payload['connectivity']} != {kappa}")
            ok = kappa >= len(p) - 1
            return CertificateCheck(ok, kind, "" if ok else f"connectivity {kappa} < {len(p) - 1}")

        # extraction
        k = payload.get("k")
        if not isinstance(k, int):
            raise CertificateError("extraction payload needs an integer k")
        if len(p) != k:
            return CertificateCheck(False, kind, f"partition has {len(p)} classes, expected {k}")
        unique = unique_coloring(g, k)
        if unique.status is not Uniqueness.UNIQUE or unique.partition != p:
            return CertificateCheck(False, kind, f"graph is not uniquely {k}-colorable by the given partition")
        w = _witness(payload, "witness")
        check = verify_clique_minor(g, w)
        if not check:
            return CertificateCheck(False, kind, check.violation)
        if w.order < k:
            return CertificateCheck(False, kind, f"witness order {w.order} < {k}")
        return CertificateCheck(True, kind)
    except (NotAPartition, GraphError) as exc:
        raise CertificateError(str(exc)) from exc


def _normalise(obj: Any) -> Any:
    if isinstance(obj, (list, tuple)):
        return [_normalise(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _normalise(v) for k, v in obj.items()}
    return obj
