"""Colorings as canonical partitions into anticliques, and the Kempe property."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph, bits, is_connected_subset, lowest, mask_of


class NotAPartition(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty vertex classes, stored as bitsets sorted by least element."""

    classes: tuple[int, ...]

    @classmethod
    def from_lists(cls, classes: Iterable[Iterable[int]]) -> Partition:
        return cls.of_masks(mask_of(c) for c in classes)

    @classmethod
    def of_masks(cls, masks: Iterable[int]) -> Partition:
        masks = list(masks)
        if any(m == 0 for m in masks):
            raise NotAPartition("empty class")
        return cls(tuple(sorted(masks, key=lowest)))

    @property
    def order(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def to_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.classes]

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        raise KeyError(v)


def check_partition(g: Graph, p: Partition) -> None:
    """Raise NotAPartition unless ``p`` splits V(g) into disjoint nonempty classes."""
    seen = 0
    for c in p.classes:
        if c == 0:
            raise NotAPartition("empty class")
        if c & seen:
            raise NotAPartition(f"vertex {lowest(c & seen)} lies in two classes")
        if c >> g.n:
            raise NotAPartition(f"vertex {g.n + lowest(c >> g.n)} is not in the graph")
        seen |= c
    if seen != g.all_vertices:
        raise NotAPartition(f"vertex {lowest(g.all_vertices & ~seen)} is not covered")


@dataclass(frozen=True)
class KempeReport:
    proper: bool
    kempe: bool
    star_ok: bool
    failing_pair: tuple[int, int] | None
    order: int
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "proper": self.proper,
            "kempe": self.kempe,
            "star_ok": self.star_ok,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "order": self.order,
            "reason": self.reason,
        }


def is_anticlique(g: Graph, s: int) -> bool:
    return all(not g.adj[v] & s for v in bits(s))


def verify_partition(g: Graph, p: Partition) -> KempeReport:
    check_partition(g, p)
    classes = p.classes
    failing: tuple[int, int] | None = None
    reason = ""
    proper = True
    for i, c in enumerate(classes):
        if not is_anticlique(g, c):
            proper = False
            failing, reason = (i, i), f"class {i} is not an anticlique"
            break

    star_ok = True
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            if i != j and any(not g.adj[v] & b for v in bits(a)):
                star_ok = False
                break
        if not star_ok:
            break

    kempe = proper
    if proper:
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                if not is_connected_subset(g, classes[i] | classes[j]):
                    kempe = False
                    failing, reason = (i, j), f"classes {i} and {j} induce a disconnected graph"
                    break
            if not kempe:
                break
    return KempeReport(proper, kempe, star_ok, failing, len(classes), reason)


def enumerate_partitions(g: Graph, k: int) -> Iterator[Partition]:
    """Every partition of V(g) into at most k anticliques, each once, in canonical form.

    Vertices are placed in index order; a vertex joins an existing class
    (lowest first) or opens the next one, so class order is least-element
    order by construction.
    """
    n = g.n
    if n == 0:
        yield Partition(())
        return
    classes: list[int] = []

    def place(v: int) -> Iterator[Partition]:
        if v == n:
            yield Partition(tuple(classes))
            return
        nb = g.adj[v]
        for i in range(len(classes)):
            if not classes[i] & nb:
                classes[i] |= 1 << v
                yield from place(v + 1)
                classes[i] &= ~(1 << v)
        if len(classes) < k:
            classes.append(1 << v)
            yield from place(v + 1)
            classes.pop()

    yield from place(0)


def chromatic_number(g: Graph) -> int:
    k = 0
    while next(enumerate_partitions(g, k), None) is None:
        k += 1
    return k


class Uniqueness(enum.Enum):
    UNIQUE = "unique"
    MULTIPLE = "multiple"
    NONE = "none"


@dataclass(frozen=True)
class UniqueColoring:
    status: Uniqueness
    partition: Partition | None = None


def unique_coloring(g: Graph, k: int) -> UniqueColoring:
    if k < 1:
        raise ValueError("k must be at least 1")
    found: list[Partition] = []
    for p in enumerate_partitions(g, k):
        found.append(p)
        if len(found) == 2:
            return UniqueColoring(Uniqueness.MULTIPLE)
    if not found:
        return UniqueColoring(Uniqueness.NONE)
    return UniqueColoring(Uniqueness.UNIQUE, found[0])


def partition_from_labels(labels: Sequence[int]) -> Partition:
    """Group vertices by colour label; label values are arbitrary."""
    groups: dict[int, int] = {}
    for v, c in enumerate(labels):
        groups[c] = groups.get(c, 0) | 1 << v
    return Partition.of_masks(groups.values())
