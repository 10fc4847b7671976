"""Naive reference search, independent of the kernels.

Enumerates every vertex permutation from x to y and, for each, every
injective assignment of edges to consecutive pairs. Exponential; meant for
n <= 8 cross-checks only.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .hypercore import BergeCertificate, CertificateKind, Hypergraph


def _assign(pairs, H: Hypergraph, i: int, used: list[int]) -> Optional[list[int]]:
    if i == len(pairs):
        return list(used)
    a, b = pairs[i]
    for e, verts in enumerate(H.edges, start=1):
        if e in used or a not in verts or b not in verts:
            continue
        used.append(e)
        found = _assign(pairs, H, i + 1, used)
        used.pop()
        if found is not None:
            return found
    return None


def naive_hamiltonian_path(H: Hypergraph, x: int, y: int) -> Optional[BergeCertificate]:
    if H.m < H.n - 1:
        return None
    middle = [v for v in range(1, H.n + 1) if v not in (x, y)]
    for perm in itertools.permutations(middle):
        verts = (x, *perm, y)
        edges = _assign(list(zip(verts, verts[1:])), H, 0, [])
        if edges is not None:
            return BergeCertificate(CertificateKind.PATH, verts, tuple(edges))
    return None


def naive_hamiltonian_cycle(H: Hypergraph) -> Optional[BergeCertificate]:
    if H.m < H.n:
        return None
    for perm in itertools.permutations(range(2, H.n + 1)):
        verts = (1, *perm)
        pairs = list(zip(verts, verts[1:])) + [(verts[-1], 1)]
        edges = _assign(pairs, H, 0, [])
        if edges is not None:
            return BergeCertificate(CertificateKind.CYCLE, verts, tuple(edges))
    return None


def naive_longest_path(H: Hypergraph, x: int, y: int) -> int:
    """Largest vertex count of a Berge x,y-path, 0 if none."""
    others = [v for v in range(1, H.n + 1) if v not in (x, y)]
    for k in range(len(others), -1, -1):
        for inner in itertools.permutations(others, k):
            verts = (x, *inner, y)
            if _assign(list(zip(verts, verts[1:])), H, 0, []) is not None:
                return k + 2
    return 0
