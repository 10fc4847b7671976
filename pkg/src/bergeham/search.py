"""Exact search for hamiltonian Berge paths and cycles.

Thin wrappers over the kernels in :mod:`bergeham._kernels`; this layer does
the 1-based translation, builds certificates and aggregates pair reports.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .hypercore import BergeCertificate, CertificateKind, Hypergraph, VertexOutOfRange, validate_certificate


class SameEndpoints(ValueError):
    pass


class Decision(str, Enum):
    FOUND = "found"
    REFUTED = "refuted"
    UNDECIDED = "undecided"


_STATUS = {_kernels.FOUND: Decision.FOUND, _kernels.REFUTED: Decision.REFUTED, _kernels.UNDECIDED: Decision.UNDECIDED}


@dataclass(frozen=True)
class SearchOutcome:
    decided: Decision
    certificate: Optional[BergeCertificate]
    nodes_explored: int
    elapsed: float

    @property
    def found(self) -> bool:
        return self.decided is Decision.FOUND


def _check_pair(H: Hypergraph, x: int, y: int) -> None:
    for v in (x, y):
        if not 1 <= v <= H.n:
            raise VertexOutOfRange(f"vertex {v} outside [1, {H.n}]")
    if x == y:
        raise SameEndpoints(f"endpoints must differ, got {x} twice")


def _lex_first_edges(inc: np.ndarray, pairs: Sequence[tuple[int, int]]) -> list[int]:
    """Lexicographically smallest injective pair->edge assignment (0-based)."""
    m = inc.shape[0]
    options = [[e for e in range(m) if inc[e, a] and inc[e, b]] for a, b in pairs]

    def completable(start: int, used: set[int]) -> bool:
        owner: dict[int, int] = {}

        def augment(i: int, seen: set[int]) -> bool:
            for e in options[i]:
                if e in used or e in seen:
                    continue
                seen.add(e)
                if e not in owner or augment(owner[e], seen):
                    owner[e] = i
                    return True
            return False

        return all(augment(i, set()) for i in range(start, len(pairs)))

    chosen: list[int] = []
    used: set[int] = set()
    for i in range(len(pairs)):
        for e in options[i]:
            if e in used:
                continue
            used.add(e)
            if completable(i + 1, used):
                chosen.append(e)
                break
            used.discard(e)
        else:  # pragma: no cover - kernel guarantees a full matching exists
            raise RuntimeError("no injective edge assignment for a path the kernel accepted")
    return chosen


def _certificate(
    inc: np.ndarray, path: np.ndarray, slot_edges: np.ndarray, length: int, cycle: bool, deterministic: bool
) -> BergeCertificate:
    verts = [int(v) for v in path[:length]]
    pairs = [(verts[i], verts[i + 1]) for i in range(length - 1)]
    if cycle:
        pairs.append((verts[-1], verts[0]))
    if deterministic:
        edges = _lex_first_edges(inc, pairs)
    else:
        edges = [int(slot_edges[b]) for _, b in pairs]
    kind = CertificateKind.CYCLE if cycle else CertificateKind.PATH
    return BergeCertificate(kind, tuple(v + 1 for v in verts), tuple(e + 1 for e in edges))


def _run(inc, start, target, deterministic, prune, max_nodes):
    t0 = time.perf_counter()
    status, path, slot_edges, nodes = _kernels.hamiltonian_search(
        inc, start, target, prune, not deterministic, max_nodes
    )
    cert = None
    if status == _kernels.FOUND:
        cert = _certificate(inc, path, slot_edges, inc.shape[1], target < 0, deterministic)
    return SearchOutcome(_STATUS[int(status)], cert, int(nodes), time.perf_counter() - t0)


def find_hamiltonian_path(
    H: Hypergraph,
    x: int,
    y: int,
    deterministic: bool = False,
    prune: bool = True,
    max_nodes: int = 0,
) -> SearchOutcome:
    """Decide whether H has a hamiltonian Berge x,y-path.

    The search is complete, so ``REFUTED`` proves absence. With
    ``deterministic`` the witness is the lexicographically first one (vertex
    sequence, then edge-index sequence); otherwise branching is fail-first.
    ``max_nodes`` > 0 bounds the search and may yield ``UNDECIDED``.
    """
    _check_pair(H, x, y)
    return _run(H.incidence(), x - 1, y - 1, deterministic, prune, max_nodes)


def find_hamiltonian_cycle(
    H: Hypergraph, deterministic: bool = False, prune: bool = True, max_nodes: int = 0
) -> SearchOutcome:
    if H.n < 3:
        raise ValueError("a hamiltonian Berge cycle needs n >= 3")
    # every hamiltonian cycle passes vertex 1, so anchoring there loses nothing
    return _run(H.incidence(), 0, -1, deterministic, prune, max_nodes)


@dataclass
class ConnectivityReport:
    """Pairwise outcome of a hamiltonian-connectedness check, ordered by pair."""

    connected: bool
    failing_pairs: list[tuple[int, int]]
    undecided_pairs: list[tuple[int, int]] = field(default_factory=list)
    witnesses: dict[tuple[int, int], BergeCertificate] = field(default_factory=dict)
    nodes_explored: int = 0


def _pair_chunk(args):
    inc, pairs, deterministic, prune, max_nodes, keep = args
    out = []
    for x, y in pairs:
        res = _run(inc, x - 1, y - 1, deterministic, prune, max_nodes)
        out.append(((x, y), res.decided, res.certificate if keep else None, res.nodes_explored))
    return out


def hamiltonian_connectivity(
    inc: np.ndarray,
    deterministic: bool = False,
    prune: bool = True,
    keep_witnesses: bool = False,
    stop_at_first_failure: bool = False,
    max_nodes: int = 0,
    workers: int = 1,
) -> ConnectivityReport:
    """Incidence-matrix form of :func:`is_hamiltonian_connected`."""
    n = inc.shape[1]
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if workers > 1 and not stop_at_first_failure:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = [r for part in pool.map(_pair_chunk, [(inc, c, deterministic, prune, max_nodes, keep_witnesses) for c in chunks]) for r in part]
        results.sort(key=lambda t: t[0])
    else:
        results = []
        for x, y in pairs:
            res = _run(inc, x - 1, y - 1, deterministic, prune, max_nodes)
            results.append(((x, y), res.decided, res.certificate if keep_witnesses else None, res.nodes_explored))
            if stop_at_first_failure and res.decided is Decision.REFUTED:
                break
    report = ConnectivityReport(True, [])
    for pair, decided, cert, nodes in results:
        report.nodes_explored += nodes
        if decided is Decision.REFUTED:
            report.failing_pairs.append(pair)
        elif decided is Decision.UNDECIDED:
            report.undecided_pairs.append(pair)
        elif cert is not None:
            report.witnesses[pair] = cert
    report.connected = not report.failing_pairs and not report.undecided_pairs
    return report


def is_hamiltonian_connected(
    H: Hypergraph,
    deterministic: bool = False,
    prune: bool = True,
    keep_witnesses: bool = False,
    max_nodes: int = 0,
    workers: int = 1,
) -> ConnectivityReport:
    """Run the path search over every unordered pair {x, y}, x < y."""
    if H.n < 2:
        raise ValueError("hamiltonian-connectedness needs n >= 2")
    return hamiltonian_connectivity(
        H.incidence(), deterministic, prune, keep_witnesses, max_nodes=max_nodes, workers=workers
    )


def longest_path_between(
    H: Hypergraph, x: int, y: int, max_nodes: int = 0
) -> Optional[tuple[int, BergeCertificate]]:
    """Maximum vertex count over Berge x,y-paths, with a witness; None if x, y are disconnected."""
    _check_pair(H, x, y)
    inc = H.incidence()
    best, path, slot_edges, _, complete = _kernels.longest_search(inc, x - 1, y - 1, max_nodes)
    if not complete:
        raise TimeoutError(f"node budget {max_nodes} exhausted before the longest path was certified")
    if best == 0:
        return None
    cert = _certificate(inc, path, slot_edges, int(best), False, False)
    return int(best), cert


@dataclass
class ExtendabilityReport:
    extendable: bool
    failing: list[tuple[int, int, int]]  # (edge index, u, w)
    checked: int


def is_one_extendable(H: Hypergraph, stop_at_first_failure: bool = False) -> ExtendabilityReport:
    """Check 1-extendability: every edge e and ordered u != w in e start a hamiltonian cycle.

    The cycle u, e, w, ... , u exists iff H - e has a hamiltonian w,u-path, and
    that question is symmetric in (u, w), so each unordered pair is searched once.
    """
    if H.n < 3:
        raise ValueError("1-extendability needs n >= 3")
    failing: list[tuple[int, int, int]] = []
    checked = 0
    inc = H.incidence()
    keep = np.ones(H.m, dtype=bool)
    for idx, e in enumerate(H.edges, start=1):
        keep[:] = True
        keep[idx - 1] = False
        sub = np.ascontiguousarray(inc[keep])
        for u, w in itertools.combinations(e, 2):
            res = _run(sub, w - 1, u - 1, False, True, 0)
            checked += 2
            if res.decided is not Decision.FOUND:
                failing.extend([(idx, u, w), (idx, w, u)])
                if stop_at_first_failure:
                    return ExtendabilityReport(False, failing, checked)
    return ExtendabilityReport(not failing, failing, checked)


def verify_outcome(H: Hypergraph, outcome: SearchOutcome) -> bool:
    """Soundness self-check used by tests and the CLI."""
    if outcome.certificate is None:
        return outcome.decided is not Decision.FOUND
    return bool(validate_certificate(H, outcome.certificate)) and len(outcome.certificate) == H.n
