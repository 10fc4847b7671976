"""Extremal hypergraph families and the punctured tight cycle witness paths.

Labelling is deterministic and part of the external contract:

* H1 / H1P: clique Q on the lowest ids ``1..|Q|``, clique R on the top ids,
  overlapping in the last one (H1) or last two (H1P) ids of Q.
* H2 / H2P: part A on ``1..|A|``, part B on ``|A|+1..n``.
* H3 / H3P / C_PRIME: tight cycle C(n, r) with v_i = i and e_i at edge
  position i, minus the deleted edges. Surviving edges keep their cycle
  index as ``Hypergraph.labels``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .hypercore import (
    BergeCertificate,
    CertificateKind,
    Hypergraph,
    new_hypergraph,
    validate_certificate,
)


class BadParameters(ValueError):
    pass


class InternalConstructionError(RuntimeError):
    pass


class Family(str, Enum):
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    H1P = "H1P"
    H2P = "H2P"
    H3P = "H3P"
    H4 = "H4"
    TIGHT_CYCLE = "TIGHT_CYCLE"
    C_PRIME = "C_PRIME"


@dataclass(frozen=True)
class ConstructionSpec:
    family: Family
    n: int = 5
    r: int = 3
    deleted: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if isinstance(self.deleted, int):
            object.__setattr__(self, "deleted", (self.deleted,))
        else:
            object.__setattr__(self, "deleted", tuple(self.deleted))


@dataclass(frozen=True)
class SpecialPair:
    x: int
    y: int

    def __post_init__(self):
        if self.x == self.y:
            raise ValueError("special pair needs distinct vertices")

    def as_tuple(self) -> tuple[int, int]:
        return (min(self.x, self.y), max(self.x, self.y))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def tight_cycle_edges(n: int, r: int) -> list[tuple[int, ...]]:
    return [tuple(sorted(((i - 1 + k) % n) + 1 for k in range(r))) for i in range(1, n + 1)]


def build_tight_cycle(n: int, r: int) -> Hypergraph:
    _require(2 <= r < n, f"tight cycle needs 2 <= r < n, got n={n}, r={r}")
    return new_hypergraph(n, r, tight_cycle_edges(n, r))


def _tight_cycle_minus(n: int, r: int, deleted: Sequence[int]) -> Hypergraph:
    _require(2 <= r < n, f"tight cycle needs 2 <= r < n, got n={n}, r={r}")
    for j in deleted:
        _require(1 <= j <= n, f"deleted edge index {j} not in [1, {n}]")
    _require(len(set(deleted)) == len(deleted), f"deleted indices {tuple(deleted)} repeat")
    edges = tight_cycle_edges(n, r)
    keep = [i for i in range(1, n + 1) if i not in deleted]
    return new_hypergraph(n, r, [edges[i - 1] for i in keep], labels=keep)


def build_c_prime(n: int, r: int, j: int) -> Hypergraph:
    """C(n, r) with e_j removed; ``labels`` map edge positions back to cycle indices."""
    return _tight_cycle_minus(n, r, [j])


def _two_cliques(n: int, r: int, q_size: int, shared: int) -> Hypergraph:
    Q = range(1, q_size + 1)
    R = range(q_size - shared + 1, n + 1)
    edges = [c for c in combinations(Q, r)]
    edges += [c for c in combinations(R, r) if not set(c) <= set(Q)]
    return new_hypergraph(n, r, edges)


def _split(n: int, r: int, a_size: int) -> Hypergraph:
    edges = [c for c in combinations(range(1, n + 1), r) if sum(1 for v in c if v <= a_size) <= 1]
    return new_hypergraph(n, r, edges)


H4_EDGES = ((1, 5, 2), (1, 5, 3), (1, 5, 4), (2, 3, 4))


def check_parameters(spec: ConstructionSpec) -> None:
    f, n, r = spec.family, spec.n, spec.r
    if f in (Family.H1, Family.H2):
        _require(n > 3 and 3 <= r and 2 * r <= n - 1, f"{f.value} needs 3 <= r <= (n-1)/2, got n={n}, r={r}")
    elif f in (Family.H1P, Family.H2P):
        _require(n > 3 and 3 <= r and 2 * r <= n, f"{f.value} needs 3 <= r <= n/2, got n={n}, r={r}")
    elif f is Family.H3:
        _require(3 <= r < n and 2 * r >= n, f"H3 needs n/2 <= r < n and r >= 3, got n={n}, r={r}")
        _require(len(spec.deleted) <= 1, "H3 deletes exactly one edge")
    elif f is Family.H3P:
        _require(3 <= r < n and 2 * r > n, f"H3P needs n/2 < r < n and r >= 3, got n={n}, r={r}")
        _require(len(spec.deleted) in (0, 2), "H3P deletes exactly two edges")
    elif f is Family.H4:
        _require((n, r) == (5, 3), f"H4 is fixed at n=5, r=3, got n={n}, r={r}")
    elif f is Family.TIGHT_CYCLE:
        _require(2 <= r < n, f"tight cycle needs 2 <= r < n, got n={n}, r={r}")
    elif f is Family.C_PRIME:
        _require(3 <= r < n, f"C_PRIME needs 3 <= r < n, got n={n}, r={r}")
        _require(len(spec.deleted) <= 1, "C_PRIME deletes exactly one edge")
    for j in spec.deleted:
        _require(1 <= j <= n, f"deleted edge index {j} not in [1, {n}]")


def build(spec: ConstructionSpec) -> tuple[Hypergraph, Optional[SpecialPair]]:
    """Build a family member and, where one is known, its non-hamiltonian-connected pair."""
    check_parameters(spec)
    f, n, r = spec.family, spec.n, spec.r
    if f is Family.H1:
        return _two_cliques(n, r, (n + 2) // 2, 1), None
    if f is Family.H2:
        return _split(n, r, (n + 2) // 2), None
    if f is Family.H1P:
        q = (n + 3) // 2
        return _two_cliques(n, r, q, 2), SpecialPair(q - 1, q)
    if f is Family.H2P:
        a = (n + 1) // 2
        return _split(n, r, a), SpecialPair(a + 1, a + 2)
    if f is Family.H3:
        return _tight_cycle_minus(n, r, spec.deleted or (n,)), None
    if f is Family.H3P:
        return _tight_cycle_minus(n, r, spec.deleted or (n, 1)), None
    if f is Family.H4:
        return new_hypergraph(5, 3, H4_EDGES), SpecialPair(1, 5)
    if f is Family.TIGHT_CYCLE:
        return build_tight_cycle(n, r), None
    return build_c_prime(n, r, spec.deleted[0] if spec.deleted else n), None


def expected_min_degree(spec: ConstructionSpec) -> int:
    check_parameters(spec)
    f, n, r = spec.family, spec.n, spec.r
    if f in (Family.H1, Family.H2):
        return comb((n - 1) // 2, r - 1)
    if f in (Family.H1P, Family.H2P):
        return comb(n // 2, r - 1)
    if f is Family.H3:
        return r - 1
    if f is Family.H3P:
        return r - 2
    if f is Family.H4:
        return 2
    if f is Family.TIGHT_CYCLE:
        return r
    return r - 1


# -- witness paths in C'(n, r) ------------------------------------------------


def _normalized_path(n: int, j: int, h: int) -> tuple[list[int], list[int]]:
    """Hamiltonian v_1,v_h-path in C(n,r) - e_j, assuming 2 <= h <= j+1 <= n.

    Returns (vertices, cycle edge labels). Needs r >= 3 for every step.
    """
    verts = [1]
    edges: list[int] = []

    def step(e: int, v: int) -> None:
        edges.append(e)
        verts.append(v)

    # first leg: v_1 through v_2..v_{h-1} to v_n, odd indices up then even down
    if h % 2 == 1:
        for i in range(1, h - 3, 2):
            step(i, i + 2)
        if h > 2:
            step(h - 2, h - 1)
        for k in range(h - 1, 3, -2):
            step(k - 2, k - 2)
    elif h > 2:
        for i in range(1, h - 2, 2):
            step(i, i + 2)
        step(h - 2, h - 2)
        for k in range(h - 2, 3, -2):
            step(k - 2, k - 2)
    step(n, n)
    # second leg: v_n down to v_h, hopping over the deleted e_j
    for k in range(n, j + 1, -1):
        step(k - 1, k - 1)
    for k in range(j + 1, h, -1):
        step(k - 2, k - 1)
    return verts, edges


def _dihedral(n: int, r: int, reflect: bool, t: int):
    """Vertex and edge maps of a dihedral symmetry of C(n, r) on 1-based indices."""

    def vmap(i: int) -> int:
        return ((t - i) if reflect else (i + t)) % n or n

    def emap(i: int) -> int:
        return ((t - i - r + 1) if reflect else (i + t)) % n or n

    return vmap, emap


@dataclass(frozen=True)
class Relabeling:
    """Dihedral symmetry taking the requested instance to the normal form."""

    reflect: bool
    shift: int
    swapped: bool
    h: int
    j: int


def normalize_pair(n: int, r: int, j: int, x: int, y: int) -> Relabeling:
    """Find a symmetry sending (x, y, e_j) to (v_1, v_h, e_j') with h <= j'+1 <= n.

    ``swapped`` means the roles of x and y are exchanged (the path is later reversed).
    """
    for swapped in (False, True):
        a, b = (y, x) if swapped else (x, y)
        for reflect in (False, True):
            for t in range(n):
                vmap, emap = _dihedral(n, r, reflect, t)
                if vmap(a) != 1:
                    continue
                h, jn = vmap(b), emap(j)
                if h <= jn + 1 <= n:
                    return Relabeling(reflect, t, swapped, h, jn)
    raise InternalConstructionError(f"no normalizing symmetry for n={n}, r={r}, j={j}, x={x}, y={y}")


def witness_path_for_pair(n: int, r: int, j: int, x: int, y: int) -> tuple[BergeCertificate, Relabeling]:
    """Explicit hamiltonian x,y-path in C'(n, r) = C(n, r) - e_j.

    Edge indices in the certificate are positions in :func:`build_c_prime`'s
    edge list, so it validates directly against ``build_c_prime(n, r, j)``.
    """
    _require(3 <= r < n, f"witness path needs 3 <= r < n, got n={n}, r={r}")
    _require(1 <= j <= n, f"deleted edge index {j} not in [1, {n}]")
    for v in (x, y):
        _require(1 <= v <= n, f"vertex {v} not in [1, {n}]")
    _require(x != y, "endpoints must be distinct")
    rel = normalize_pair(n, r, j, x, y)
    verts, labels = _normalized_path(n, rel.j, rel.h)
    vmap, emap = _dihedral(n, r, rel.reflect, rel.shift)
    vinv = {vmap(i): i for i in range(1, n + 1)}
    einv = {emap(i): i for i in range(1, n + 1)}
    verts = [vinv[v] for v in verts]
    labels = [einv[e] for e in labels]
    if rel.swapped:
        verts.reverse()
        labels.reverse()
    H = build_c_prime(n, r, j)
    pos = {lab: i for i, lab in enumerate(H.labels, start=1)}
    if any(lab not in pos for lab in labels):
        raise InternalConstructionError(f"witness for n={n}, r={r}, j={j}, ({x},{y}) uses the deleted edge")
    cert = BergeCertificate(CertificateKind.PATH, tuple(verts), tuple(pos[lab] for lab in labels))
    check = validate_certificate(H, cert)
    if not check or len(verts) != n:
        raise InternalConstructionError(
            f"witness for n={n}, r={r}, j={j}, ({x},{y}) failed validation: {check.violation} at {check.position}"
        )
    return cert, rel


def witness_path_c_prime(n: int, r: int, j: int, h: int) -> BergeCertificate:
    """Hamiltonian v_1,v_h-path in C(n, r) - e_j."""
    _require(2 <= h <= n, f"endpoint index h={h} must lie in [2, {n}]")
    return witness_path_for_pair(n, r, j, 1, h)[0]
