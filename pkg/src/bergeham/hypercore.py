"""Uniform hypergraphs, vertex degrees and Berge certificate validation.

All public interfaces use 1-based vertex ids and 1-based edge indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

MAX_VERTICES = 64


class HypergraphError(ValueError):
    """Base class for malformed hypergraph input; ``edge`` is the 1-based offending edge."""

    def __init__(self, message: str, edge: Optional[int] = None):
        super().__init__(message)
        self.edge = edge


class NonUniformEdge(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class RTooSmall(HypergraphError):
    pass


class RExceedsN(HypergraphError):
    pass


class TooManyVertices(HypergraphError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 1..n.

    ``edges`` keeps input order; edge index i (1-based) refers to ``edges[i-1]``.
    ``labels`` optionally carries an external name for each edge (the tight
    cycle index for punctured tight cycles) and defaults to 1..m.
    Build instances through :func:`new_hypergraph`, which validates.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] = field(default=(), compare=False)
    masks: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, index: int) -> tuple[int, ...]:
        """Vertices of the edge with 1-based ``index``."""
        if not 1 <= index <= len(self.edges):
            raise IndexError(f"edge index {index} not in [1, {len(self.edges)}]")
        return self.edges[index - 1]

    def contains(self, index: int, v: int) -> bool:
        return bool(self.masks[index - 1] >> (v - 1) & 1)

    def label_of(self, index: int) -> int:
        return self.labels[index - 1]

    def index_of_label(self, label: int) -> int:
        return self.labels.index(label) + 1

    def incidence(self) -> np.ndarray:
        """(m, n) uint8 matrix with a 1 where vertex j+1 lies in edge i+1."""
        inc = np.zeros((self.m, self.n), dtype=np.uint8)
        for i, e in enumerate(self.edges):
            inc[i, [v - 1 for v in e]] = 1
        return inc

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v - 1] += 1
        return deg

    def without_edges(self, indices: Iterable[int]) -> "Hypergraph":
        drop = set(indices)
        keep = [i for i in range(1, self.m + 1) if i not in drop]
        return new_hypergraph(
            self.n, self.r, [self.edges[i - 1] for i in keep], labels=[self.labels[i - 1] for i in keep]
        )

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return new_hypergraph(self.n, self.r, list(self.edges) + [tuple(e) for e in extra])

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply vertex map v -> perm[v-1]; edge order is preserved."""
        return new_hypergraph(self.n, self.r, [[perm[v - 1] for v in e] for e in self.edges], labels=self.labels)

    def canonical(self) -> "Hypergraph":
        """Same edge set with edges sorted lexicographically."""
        return new_hypergraph(self.n, self.r, sorted(self.edges))


def new_hypergraph(
    n: int, r: int, edges: Iterable[Iterable[int]], labels: Optional[Sequence[int]] = None
) -> Hypergraph:
    if r < 2:
        raise RTooSmall(f"uniformity r={r} must be at least 2")
    if r > n:
        raise RExceedsN(f"uniformity r={r} exceeds vertex count n={n}")
    if n > MAX_VERTICES:
        raise TooManyVertices(f"n={n} exceeds the supported maximum of {MAX_VERTICES}")
    canon: list[tuple[int, ...]] = []
    masks: list[int] = []
    seen: dict[int, int] = {}
    for i, raw in enumerate(edges, start=1):
        raw = [int(v) for v in raw]
        verts = tuple(sorted(set(raw)))
        if len(raw) != r or len(verts) != r:
            raise NonUniformEdge(f"edge {i} has {len(raw)} entries, {len(verts)} distinct; expected {r}", i)
        for v in verts:
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"edge {i} contains vertex {v} outside [1, {n}]", i)
        mask = 0
        for v in verts:
            mask |= 1 << (v - 1)
        if mask in seen:
            raise DuplicateEdge(f"edge {i} repeats edge {seen[mask]}", i)
        seen[mask] = i
        canon.append(verts)
        masks.append(mask)
    if labels is None:
        labels = range(1, len(canon) + 1)
    labels = tuple(labels)
    if len(labels) != len(canon):
        raise HypergraphError("labels must have one entry per edge")
    return Hypergraph(n, r, tuple(canon), labels, tuple(masks))


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 1 <= v <= H.n:
        raise VertexOutOfRange(f"vertex {v} outside [1, {H.n}]")


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    bit = 1 << (v - 1)
    return sum(1 for mk in H.masks if mk & bit)


def min_degree(H: Hypergraph) -> int:
    """Minimum vertex degree; 0 for an edgeless hypergraph."""
    return min(H.degrees())


class CertificateKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class BergeCertificate:
    kind: CertificateKind
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", CertificateKind(self.kind))
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "edge_indices", tuple(int(e) for e in self.edge_indices))

    def __len__(self) -> int:
        return len(self.vertices)

    def interleaved(self, labels: Optional[Sequence[int]] = None) -> str:
        """Render as ``v1,e7,v7,...``; ``labels`` maps edge index to a display label."""
        parts = []
        for i, v in enumerate(self.vertices):
            parts.append(f"v{v}")
            if i < len(self.edge_indices):
                e = self.edge_indices[i]
                parts.append(f"e{labels[e - 1] if labels else e}")
        if self.kind is CertificateKind.CYCLE and self.vertices:
            parts.append(f"v{self.vertices[0]}")
        return ",".join(parts)


class Violation(str, Enum):
    WRONG_LENGTH = "WrongLength"
    VERTEX_OUT_OF_RANGE = "VertexOutOfRange"
    INDEX_OUT_OF_RANGE = "IndexOutOfRange"
    REPEATED_VERTEX = "RepeatedVertex"
    REPEATED_EDGE = "RepeatedEdge"
    PAIR_NOT_COVERED = "PairNotCovered"


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of :func:`validate_certificate`.

    ``position`` is 1-based: the offending vertex/edge slot, or for
    ``PairNotCovered`` the index i of the pair {v_i, v_{i+1}}.
    """

    ok: bool
    violation: Optional[Violation] = None
    position: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_certificate(H: Hypergraph, c: BergeCertificate) -> ValidationResult:
    s = len(c.vertices)
    need = s - 1 if c.kind is CertificateKind.PATH else s
    if s == 0 or len(c.edge_indices) != need or (c.kind is CertificateKind.CYCLE and s < 2):
        return ValidationResult(
            False, Violation.WRONG_LENGTH, None, f"{s} vertices need {max(need, 0)} edges, got {len(c.edge_indices)}"
        )
    seen: set[int] = set()
    for i, v in enumerate(c.vertices, start=1):
        if not 1 <= v <= H.n:
            return ValidationResult(False, Violation.VERTEX_OUT_OF_RANGE, i, f"vertex {v}")
        if v in seen:
            return ValidationResult(False, Violation.REPEATED_VERTEX, i, f"vertex {v} repeated")
        seen.add(v)
    used: set[int] = set()
    for i, e in enumerate(c.edge_indices, start=1):
        if not 1 <= e <= H.m:
            return ValidationResult(False, Violation.INDEX_OUT_OF_RANGE, i, f"edge index {e}")
        if e in used:
            return ValidationResult(False, Violation.REPEATED_EDGE, i, f"edge index {e} repeated")
        used.add(e)
    for i, e in enumerate(c.edge_indices, start=1):
        a = c.vertices[i - 1]
        b = c.vertices[i % s]
        if not (H.contains(e, a) and H.contains(e, b)):
            return ValidationResult(False, Violation.PAIR_NOT_COVERED, i, f"{{{a},{b}}} not in edge {e}")
    return ValidationResult(True)


def is_hamiltonian_certificate(H: Hypergraph, c: BergeCertificate) -> bool:
    return len(c.vertices) == H.n and bool(validate_certificate(H, c))
