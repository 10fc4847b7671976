"""Brute-force checks of the positional inequalities on graph paths.

A graph path is just positions: vertices 1..s, edge i joins vertices i and
i+1 (edges 1..s-1). Each ``check_*`` function tests one instance; the
``exhaust_lemma`` driver enumerates every instance up to ``s_max`` with
compiled bitmask loops (bit k-1 stands for position k).

Lemma ids: ``verc2``, ``indep2``, ``ver_new``, ``ed_new``, ``consecpath2``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ._accel import njit

LEMMAS = ("verc2", "indep2", "ver_new", "ed_new", "consecpath2")
S_CAP = 12
MAX_RECORDED = 32

# names of the conclusion parts per lemma, in kernel stats order
PARTS = {
    "verc2": ("(i) q>=2", "(ii) q=1", "B independent"),
    "indep2": ("q>=2", "q=1"),
    "ver_new": ("(i) A=B", "(ii) A!=B"),
    "ed_new": ("(i) A'=B'", "(ii) A'!=B'"),
    "consecpath2": ("(i) A=B", "(ii) A!=B"),
}
# parts that come with an "equality only if ..." clause
CHARACTERIZED = {
    "verc2": (),
    "indep2": (),
    "ver_new": (0, 1),
    "ed_new": (0, 1),
    "consecpath2": (1,),
}


class HypothesisViolated(ValueError):
    """The instance does not satisfy the lemma's hypotheses (not a lemma failure)."""


@dataclass(frozen=True)
class LemmaInstance:
    s: int
    q: int = 2
    A: frozenset = frozenset()
    B: frozenset = frozenset()
    F: frozenset = frozenset()
    I: frozenset = frozenset()
    Aprime: frozenset = frozenset()
    Bprime: frozenset = frozenset()

    def __post_init__(self):
        for name in ("A", "B", "F", "I", "Aprime", "Bprime"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def a(self) -> int:
        return len(self.Aprime)


@dataclass(frozen=True)
class BoundCheck:
    part: str
    lhs: int
    rhs: int
    holds: bool
    tight: bool
    characterized: Optional[bool] = None  # None: no equality clause for this part


@dataclass(frozen=True)
class LemmaVerdict:
    lemma: str
    checks: tuple[BoundCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds and c.characterized is not False for c in self.checks)


def _independent(X) -> bool:
    return all(i + 1 not in X for i in X)


def _in_range(X, lo: int, hi: int, what: str) -> None:
    bad = [i for i in X if not lo <= i <= hi]
    if bad:
        raise HypothesisViolated(f"{what} positions {sorted(bad)} outside [{lo}, {hi}]")


def _spread(X, Y, q: int) -> bool:
    return all(i == j or abs(i - j) >= q for i in X for j in Y)


def _containment(X, Y) -> bool:
    return X <= Y or Y <= X


def check_verc2(inst: LemmaInstance) -> LemmaVerdict:
    s, q, A, B = inst.s, inst.q, inst.A, inst.B
    _in_range(A | B, 1, s, "vertex")
    D = B - A
    if q < 1:
        raise HypothesisViolated("q must be at least 1")
    if not A or not B:
        raise HypothesisViolated("A and B must be nonempty")
    if not _independent(A):
        raise HypothesisViolated("A is not independent")
    if not D:
        raise HypothesisViolated("B - A is empty")
    if not all(abs(i - j) >= q for i in A for j in D):
        raise HypothesisViolated(f"some A, B-A positions are closer than q={q}")
    checks = []
    if q >= 2:
        rhs = 2 * len(A) + len(D) + q - 2
        checks.append(BoundCheck("(i) q>=2", s, rhs, s >= rhs, s == rhs))
    else:
        rhs = 2 * len(A) + len(D) - 2
        checks.append(BoundCheck("(ii) q=1", s, rhs, s >= rhs, s == rhs))
    if _independent(B):
        rhs = 2 * len(A) + 2 * len(D) + q - 3
        checks.append(BoundCheck("B independent", s, rhs, s >= rhs, s == rhs))
    return LemmaVerdict("verc2", tuple(checks))


def edge_vertex_distance(i: int, k: int) -> int:
    """Distance on the path from edge i (vertices i, i+1) to vertex k."""
    return min(abs(i - k), abs(i + 1 - k))


def check_indep2(inst: LemmaInstance) -> LemmaVerdict:
    s, q, I, E = inst.s, inst.q, inst.I, inst.Aprime
    _in_range(I, 1, s, "vertex")
    _in_range(E, 1, s - 1, "edge")
    a = len(E)
    if q < 1:
        raise HypothesisViolated("q must be at least 1")
    if not I or not _independent(I):
        raise HypothesisViolated("I must be a nonempty independent set")
    if not 1 <= a < s:
        raise HypothesisViolated("need 1 <= a < s")
    if not all(edge_vertex_distance(i, k) >= q for i in E for k in I):
        raise HypothesisViolated(f"an edge of A' is closer than q={q} to I")
    if q >= 2:
        rhs = (s - a - q + 1) // 2
        part = "q>=2"
    else:
        rhs = -((a - s) // 2)
        part = "q=1"
    return LemmaVerdict("indep2", (BoundCheck(part, len(I), rhs, len(I) <= rhs, len(I) == rhs),))


def _spread_pair(lemma: str, length: int, q: int, X, Y) -> LemmaVerdict:
    # shared by ver_new (vertices 1..s) and ed_new (edges 1..s-1, i.e. length s-1)
    if X == Y:
        rhs = 1 + q * (len(X) - 1)
        tight = length == rhs
        char = X == frozenset(range(1, length + 1, q)) if tight else None
        return LemmaVerdict(lemma, (BoundCheck(PARTS[lemma][0], length, rhs, length >= rhs, tight, char),))
    rhs = len(X) + len(Y) + q - 2
    tight = length == rhs
    char = _containment(X, Y) if tight else None
    return LemmaVerdict(lemma, (BoundCheck(PARTS[lemma][1], length, rhs, length >= rhs, tight, char),))


def check_ver_new(inst: LemmaInstance) -> LemmaVerdict:
    s, q, A, B = inst.s, inst.q, inst.A, inst.B
    _in_range(A | B, 1, s, "vertex")
    if not A or not B:
        raise HypothesisViolated("A and B must be nonempty")
    if q < 2:
        raise HypothesisViolated("q must be at least 2")
    if not _spread(A, B, q):
        raise HypothesisViolated(f"some A, B positions differ by less than q={q}")
    return _spread_pair("ver_new", s, q, A, B)


def check_ed_new(inst: LemmaInstance) -> LemmaVerdict:
    s, q, A, B = inst.s, inst.q, inst.Aprime, inst.Bprime
    _in_range(A | B, 1, s - 1, "edge")
    if not A or not B:
        raise HypothesisViolated("A' and B' must be nonempty")
    if q < 2:
        raise HypothesisViolated("q must be at least 2")
    if not _spread(A, B, q):
        raise HypothesisViolated(f"some A', B' indices differ by less than q={q}")
    return _spread_pair("ed_new", s - 1, q, A, B)


def check_consecpath2(inst: LemmaInstance) -> LemmaVerdict:
    s, A, B, F = inst.s, inst.A, inst.B, inst.F
    _in_range(A | B, 1, s, "vertex")
    _in_range(F, 1, s - 1, "edge")
    ends = {i for i in F} | {i + 1 for i in F}
    if (A | B) & ends:
        raise HypothesisViolated("A or B meets an endpoint of an F edge")
    if not _spread(A, B, 2):
        raise HypothesisViolated("some A, B positions are adjacent")
    f = len(F)
    if A == B:
        rhs = len(A) + len(B) + f - 1
        return LemmaVerdict("consecpath2", (BoundCheck("(i) A=B", s, rhs, s >= rhs, s == rhs),))
    rhs = len(A) + len(B) + f
    tight = s == rhs
    return LemmaVerdict(
        "consecpath2", (BoundCheck("(ii) A!=B", s, rhs, s >= rhs, tight, _containment(A, B) if tight else None),)
    )


CHECKS: dict[str, Callable[[LemmaInstance], LemmaVerdict]] = {
    "verc2": check_verc2,
    "indep2": check_indep2,
    "ver_new": check_ver_new,
    "ed_new": check_ed_new,
    "consecpath2": check_consecpath2,
}


def q_range(lemma: str, q_max: int) -> range:
    if lemma == "consecpath2":
        return range(2, 3)  # the separation is fixed at 2
    if lemma in ("ver_new", "ed_new"):
        return range(2, q_max + 1)
    return range(1, q_max + 1)


# -- compiled enumeration ------------------------------------------------------
# stats[part] = [tested, violations, tight, tight-but-characterization-fails]
# rec rows = [s, q, part, mask1, mask2, mask3]


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def _dilate(x, t, full):
    out = x
    for k in range(1, t + 1):
        out |= (x << k) | (x >> k)
    return out & full


@njit
def _ring(x, t, full):
    # positions at distance 1..t from some element of x
    out = 0
    for k in range(1, t + 1):
        out |= (x << k) | (x >> k)
    return out & full


@njit
def _tally(stats, rec, nrec, part, s, q, m1, m2, m3, lhs, rhs, upper, char):
    # upper: the lemma asserts lhs <= rhs instead of lhs >= rhs
    stats[part, 0] += 1
    ok = lhs <= rhs if upper else lhs >= rhs
    if not ok:
        stats[part, 1] += 1
    if lhs == rhs:
        stats[part, 2] += 1
        if char == 0:
            stats[part, 3] += 1
    if (not ok or (lhs == rhs and char == 0)) and nrec < rec.shape[0]:
        rec[nrec, 0] = s
        rec[nrec, 1] = q
        rec[nrec, 2] = part
        rec[nrec, 3] = m1
        rec[nrec, 4] = m2
        rec[nrec, 5] = m3
        return nrec + 1
    return nrec


@njit
def _exhaust_verc2(s, q, stats, rec, nrec):
    full = (1 << s) - 1
    count = 0
    for A in range(1, full + 1):
        if A & (A >> 1):
            continue
        near = _dilate(A, q - 1, full)
        a = _popcount(A)
        for B in range(1, full + 1):
            D = B & ~A
            if D == 0 or D & near:
                continue
            count += 1
            d = _popcount(D)
            if q >= 2:
                nrec = _tally(stats, rec, nrec, 0, s, q, A, B, 0, s, 2 * a + d + q - 2, False, -1)
            else:
                nrec = _tally(stats, rec, nrec, 1, s, q, A, B, 0, s, 2 * a + d - 2, False, -1)
            if B & (B >> 1) == 0:
                nrec = _tally(stats, rec, nrec, 2, s, q, A, B, 0, s, 2 * a + 2 * d + q - 3, False, -1)
    return count, nrec


@njit
def _exhaust_indep2(s, q, stats, rec, nrec):
    full = (1 << s) - 1
    efull = (1 << (s - 1)) - 1
    count = 0
    for E in range(1, efull + 1):
        a = _popcount(E)
        if a >= s:
            continue
        ends = E | (E << 1)
        banned = _dilate(ends, q - 1, full)
        allowed = full & ~banned
        sub = allowed
        while sub:
            if sub & (sub >> 1) == 0:
                count += 1
                size = _popcount(sub)
                if q >= 2:
                    nrec = _tally(stats, rec, nrec, 0, s, q, sub, E, 0, size, (s - a - q + 1) // 2, True, -1)
                else:
                    nrec = _tally(stats, rec, nrec, 1, s, q, sub, E, 0, size, (s - a + 1) // 2, True, -1)
            sub = (sub - 1) & allowed
    return count, nrec


@njit
def _progression(X, length, q):
    target = 0
    k = 0
    while k < length:
        target |= 1 << k
        k += q
    return 1 if X == target else 0


@njit
def _exhaust_spread(length, s, q, stats, rec, nrec):
    full = (1 << length) - 1
    count = 0
    for A in range(1, full + 1):
        near = _ring(A, q - 1, full)
        a = _popcount(A)
        for B in range(1, full + 1):
            # i == j allowed, otherwise |i - j| >= q
            if B & near:
                continue
            count += 1
            b = _popcount(B)
            if A == B:
                rhs = 1 + q * (a - 1)
                char = _progression(A, length, q) if length == rhs else -1
                nrec = _tally(stats, rec, nrec, 0, s, q, A, B, 0, length, rhs, False, char)
            else:
                rhs = a + b + q - 2
                char = -1
                if length == rhs:
                    char = 1 if (A & B) == A or (A & B) == B else 0
                nrec = _tally(stats, rec, nrec, 1, s, q, A, B, 0, length, rhs, False, char)
    return count, nrec


@njit
def _exhaust_consec(s, stats, rec, nrec):
    full = (1 << s) - 1
    efull = (1 << (s - 1)) - 1
    count = 0
    for F in range(0, efull + 1):
        f = _popcount(F)
        allowed = full & ~(F | (F << 1))
        A = allowed
        while True:
            near = _ring(A, 1, full)
            a = _popcount(A)
            B = allowed
            while True:
                if not B & near:
                    count += 1
                    b = _popcount(B)
                    if A == B:
                        nrec = _tally(stats, rec, nrec, 0, s, 2, A, B, F, s, a + b + f - 1, False, -1)
                    else:
                        rhs = a + b + f
                        char = -1
                        if s == rhs:
                            char = 1 if (A & B) == A or (A & B) == B else 0
                        nrec = _tally(stats, rec, nrec, 1, s, 2, A, B, F, s, rhs, False, char)
                if B == 0:
                    break
                B = (B - 1) & allowed
            if A == 0:
                break
            A = (A - 1) & allowed
    return count, nrec


def _bits(mask: int) -> frozenset:
    return frozenset(k + 1 for k in range(mask.bit_length()) if mask >> k & 1)


@dataclass
class PartSummary:
    part: str
    tested: int
    violations: int
    tight: int
    characterization_failures: int
    characterized: bool


@dataclass
class LemmaReport:
    """Outcome of :func:`exhaust_lemma` / :func:`sample_lemma`."""

    lemma: str
    s_max: int
    q_max: int
    instances: int
    parts: list[PartSummary]
    violations: list[dict] = field(default_factory=list)
    sampled: bool = False
    seed: Optional[int] = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(p.violations == 0 and p.characterization_failures == 0 for p in self.parts)

    @property
    def vacuous(self) -> bool:
        return self.instances == 0

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "s_max": self.s_max,
            "q_max": self.q_max,
            "instances": self.instances,
            "vacuous": self.vacuous,
            "parts": [p.__dict__ for p in self.parts],
            "violations": self.violations,
            "sampled": self.sampled,
            "seed": self.seed,
        }


def _instance_from_masks(lemma: str, s: int, q: int, m1: int, m2: int, m3: int) -> dict:
    if lemma == "verc2":
        return {"s": s, "q": q, "A": sorted(_bits(m1)), "B": sorted(_bits(m2))}
    if lemma == "indep2":
        return {"s": s, "q": q, "I": sorted(_bits(m1)), "Aprime": sorted(_bits(m2))}
    if lemma == "ver_new":
        return {"s": s, "q": q, "A": sorted(_bits(m1)), "B": sorted(_bits(m2))}
    if lemma == "ed_new":
        return {"s": s, "q": q, "Aprime": sorted(_bits(m1)), "Bprime": sorted(_bits(m2))}
    return {"s": s, "q": q, "A": sorted(_bits(m1)), "B": sorted(_bits(m2)), "F": sorted(_bits(m3))}


def exhaust_lemma(lemma: str, s_max: int, q_max: int = 4) -> LemmaReport:
    """Check ``lemma`` on every hypothesis-satisfying instance with s <= s_max, q <= q_max."""
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    if not 2 <= s_max <= S_CAP:
        raise ValueError(f"s_max must lie in [2, {S_CAP}]; use sample_lemma beyond")
    t0 = time.perf_counter()
    nparts = len(PARTS[lemma])
    stats = np.zeros((nparts, 4), dtype=np.int64)
    rec = np.zeros((MAX_RECORDED, 6), dtype=np.int64)
    nrec = 0
    total = 0
    for s in range(2, s_max + 1):
        for q in q_range(lemma, q_max):
            if lemma == "verc2":
                c, nrec = _exhaust_verc2(s, q, stats, rec, nrec)
            elif lemma == "indep2":
                c, nrec = _exhaust_indep2(s, q, stats, rec, nrec)
            elif lemma == "ver_new":
                c, nrec = _exhaust_spread(s, s, q, stats, rec, nrec)
            elif lemma == "ed_new":
                c, nrec = _exhaust_spread(s - 1, s, q, stats, rec, nrec) if s >= 2 else (0, nrec)
            else:
                c, nrec = _exhaust_consec(s, stats, rec, nrec)
            total += int(c)
    parts = [
        PartSummary(name, *(int(x) for x in stats[k]), characterized=k in CHARACTERIZED[lemma])
        for k, name in enumerate(PARTS[lemma])
    ]
    bad = [
        dict(part=PARTS[lemma][int(row[2])], **_instance_from_masks(lemma, *(int(x) for x in row[[0, 1, 3, 4, 5]])))
        for row in rec[:nrec]
    ]
    return LemmaReport(lemma, s_max, q_max, total, parts, bad, elapsed=time.perf_counter() - t0)


def random_instance(lemma: str, s: int, q: int, rng: random.Random) -> LemmaInstance:
    """Uniformly random position subsets; most draws violate the hypotheses."""

    def subset(hi: int) -> frozenset:
        return frozenset(i for i in range(1, hi + 1) if rng.random() < 0.3)

    return LemmaInstance(
        s, q, A=subset(s), B=subset(s), F=subset(s - 1), I=subset(s), Aprime=subset(s - 1), Bprime=subset(s - 1)
    )


def sample_lemma(lemma: str, s: int, q: int, samples: int, seed: int = 1) -> LemmaReport:
    """Seeded random checking for paths longer than the enumeration cap."""
    rng = random.Random(seed)
    t0 = time.perf_counter()
    check = CHECKS[lemma]
    summary = {name: [0, 0, 0, 0] for name in PARTS[lemma]}
    bad: list[dict] = []
    hits = 0
    for _ in range(samples):
        inst = random_instance(lemma, s, q, rng)
        try:
            verdict = check(inst)
        except HypothesisViolated:
            continue
        hits += 1
        for c in verdict.checks:
            row = summary[c.part]
            row[0] += 1
            row[1] += not c.holds
            row[2] += c.tight
            row[3] += c.characterized is False
            if (not c.holds or c.characterized is False) and len(bad) < MAX_RECORDED:
                bad.append({"part": c.part, "instance": repr(inst)})
    parts = [
        PartSummary(name, *summary[name], characterized=k in CHARACTERIZED[lemma])
        for k, name in enumerate(PARTS[lemma])
    ]
    return LemmaReport(lemma, s, q, hits, parts, bad, sampled=True, seed=seed, elapsed=time.perf_counter() - t0)
