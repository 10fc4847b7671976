"""Command-line entry point: ``bergeham <subcommand> ...``.

Exit status: 0 verified/found, 1 refuted/counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .constructions import BadParameters, ConstructionSpec, Family, build, expected_min_degree
from .harness import (
    CONNECTED,
    KINDS,
    ENUMERATION_CAP,
    EnumerationTooLarge,
    HypothesisViolated,
    SamplingStalled,
    ThresholdUncovered,
    exhaustive_verify,
    sampled_verify,
    threshold_info,
    verify_long_path_lemma,
    verify_sharpness,
)
from .hypercore import HypergraphError, min_degree, validate_certificate
from .io import ParseError, parse_certificate, parse_hypergraph, write_certificate, write_hypergraph
from .lemmas import LEMMAS, exhaust_lemma
from .search import (
    Decision,
    SameEndpoints,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_hamiltonian_connected,
    is_one_extendable,
)

SCHEMA = "bergeham.report/1"
EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_hypergraph(path: str):
    return parse_hypergraph(_read(path))


def _emit(args, report: dict, human: list[str]) -> None:
    if args.json:
        body = {"schema": SCHEMA, **report}
        if args.deterministic:
            body["elapsed_ms"] = None
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        print("\n".join(human))


def _elapsed(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def _spec(args) -> ConstructionSpec:
    deleted = tuple(j for j in (args.j, args.j2) if j is not None)
    family = Family(args.family.upper())
    if family is Family.H4:
        return ConstructionSpec(family, 5, 3)
    if args.n is None or args.r is None:
        raise UsageError(f"{family.value} needs --n and --r")
    return ConstructionSpec(family, args.n, args.r, deleted)


# -- subcommands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = _spec(args)
    H, pair = build(spec)
    comments = [f"family {spec.family.value} n={H.n} r={H.r}", f"expected-min-degree {expected_min_degree(spec)}"]
    if spec.family in (Family.H3, Family.H3P, Family.C_PRIME, Family.TIGHT_CYCLE):
        comments.append("edge-labels " + " ".join(map(str, H.labels)))
    if pair is not None:
        comments.append(f"special-pair {pair.x} {pair.y}")
    text = write_hypergraph(H, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _pairs(args, n: int) -> list[tuple[int, int]]:
    if args.pair:
        return [tuple(args.pair)]
    return [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    H = _load_hypergraph(args.file)
    pairs = _pairs(args, H.n)
    found, refuted, undecided = [], [], []
    certs = {}
    nodes = 0
    for x, y in pairs:
        res = find_hamiltonian_path(H, x, y, deterministic=args.deterministic, prune=not args.no_prune,
                                    max_nodes=args.max_nodes)
        nodes += res.nodes_explored
        if res.decided is Decision.FOUND:
            found.append((x, y))
            certs[(x, y)] = res.certificate
        elif res.decided is Decision.REFUTED:
            refuted.append((x, y))
        else:
            undecided.append((x, y))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for (x, y), c in certs.items():
            (out / f"path_{x}_{y}.cert").write_text(write_certificate(c))
    verdict = "refuted" if refuted else ("undecided" if undecided else "verified")
    report = {
        "task": "check",
        "parameters": {"n": H.n, "r": H.r, "m": H.m, "pairs": len(pairs), "deterministic": args.deterministic},
        "verdict": verdict,
        "counts": {"found": len(found), "refuted": len(refuted), "undecided": len(undecided), "nodes": nodes},
        "counterexamples": [{"hypergraph": write_hypergraph(H), "failing_pairs": [list(p) for p in refuted]}]
        if refuted else [],
        "certificates": {f"{x} {y}": write_certificate(c) for (x, y), c in certs.items()},
        "seed": None,
        "elapsed_ms": _elapsed(t0),
    }
    human = []
    for (x, y), c in certs.items():
        human.append(f"# hamiltonian Berge path {x} -> {y}")
        human.append(write_certificate(c).rstrip("\n"))
    for x, y in refuted:
        human.append(f"# {x} -> {y}: no hamiltonian Berge path")
    for x, y in undecided:
        human.append(f"# {x} -> {y}: undecided (node budget exhausted)")
    human.append(f"# {len(found)} found, {len(refuted)} refuted, {len(undecided)} undecided of {len(pairs)} pairs")
    _emit(args, report, human)
    if refuted:
        return EXIT_REFUTED
    return EXIT_OK if not undecided else EXIT_REFUTED


def cmd_cycle(args) -> int:
    t0 = time.perf_counter()
    H = _load_hypergraph(args.file)
    if H.n < 3:
        raise UsageError("cycle search needs n >= 3")
    res = find_hamiltonian_cycle(H, deterministic=args.deterministic, max_nodes=args.max_nodes)
    verdict = {"found": "verified", "refuted": "refuted", "undecided": "undecided"}[res.decided.value]
    report = {
        "task": "cycle",
        "parameters": {"n": H.n, "r": H.r, "m": H.m},
        "verdict": verdict,
        "counts": {"nodes": res.nodes_explored},
        "certificate": write_certificate(res.certificate) if res.certificate else None,
        "counterexamples": [],
        "seed": None,
        "elapsed_ms": _elapsed(t0),
    }
    if res.certificate:
        human = [write_certificate(res.certificate, ["hamiltonian Berge cycle"]).rstrip("\n")]
    else:
        human = [f"# no hamiltonian Berge cycle ({res.decided.value})"]
    _emit(args, report, human)
    return EXIT_OK if res.found else EXIT_REFUTED


def cmd_certify(args) -> int:
    H = _load_hypergraph(args.hypergraph)
    c = parse_certificate(_read(args.certificate))
    res = validate_certificate(H, c)
    hamiltonian = res.ok and len(c.vertices) == H.n
    report = {
        "task": "certify",
        "parameters": {"n": H.n, "r": H.r, "kind": c.kind.value, "length": len(c.vertices)},
        "verdict": "verified" if res.ok else "refuted",
        "counts": {"hamiltonian": hamiltonian},
        "violation": None if res.ok else {"kind": res.violation.value, "position": res.position, "detail": res.detail},
        "counterexamples": [],
        "seed": None,
        "elapsed_ms": None,
    }
    if res.ok:
        human = [f"valid Berge {c.kind.value} on {len(c.vertices)} vertices" + (" (hamiltonian)" if hamiltonian else "")]
    else:
        human = [f"invalid: {res.violation.value} at position {res.position}: {res.detail}"]
    _emit(args, report, human)
    return EXIT_OK if res.ok else EXIT_REFUTED


def _report_exit(args, rep, human_extra: Optional[list[str]] = None) -> int:
    d = rep.to_dict(timing=not args.deterministic)
    human = [f"{rep.task}: {rep.verdict}", f"parameters: {rep.parameters}", f"instances checked: {rep.instances_checked}"]
    human += [f"{k}: {v}" for k, v in rep.counts.items()]
    human += rep.notes
    human += human_extra or []
    for f in rep.failures:
        human.append(f"counterexample: {json.dumps(f)}")
    _emit(args, d, human)
    return EXIT_OK if rep.verdict in ("verified", "uncovered") else EXIT_REFUTED


def cmd_verify_sharpness(args) -> int:
    return _report_exit(args, verify_sharpness(_spec(args)))


def cmd_verify_exhaustive(args) -> int:
    return _report_exit(args, exhaustive_verify(args.n, args.r, args.kind, args.cap, args.iso_reduce))


def cmd_verify_sampled(args) -> int:
    return _report_exit(args, sampled_verify(args.n, args.r, args.samples, args.seed, args.kind, args.p))


def cmd_verify_lemmas(args) -> int:
    lemmas = LEMMAS if args.lemma == "all" else (args.lemma,)
    reports = [exhaust_lemma(name, args.s_max, args.q_max) for name in lemmas]
    ok = all(r.ok for r in reports)
    body = {
        "task": "verify-lemmas",
        "parameters": {"lemmas": list(lemmas), "s_max": args.s_max, "q_max": args.q_max},
        "verdict": "verified" if ok else "refuted",
        "lemmas": [r.to_dict() for r in reports],
        "counts": {"instances": sum(r.instances for r in reports),
                   "violations": sum(p.violations + p.characterization_failures for r in reports for p in r.parts)},
        "counterexamples": [v | {"lemma": r.lemma} for r in reports for v in r.violations],
        "seed": None,
        "elapsed_ms": round(sum(r.elapsed for r in reports) * 1000, 3),
    }
    human = []
    for r in reports:
        human.append(f"{r.lemma}: {r.instances} instances" + (" (no instance meets the hypotheses)" if r.vacuous else ""))
        for p in r.parts:
            human.append(
                f"  {p.part:<16} tested {p.tested:>8}  violations {p.violations:>6}  tight {p.tight:>6}"
                + (f"  characterization failures {p.characterization_failures}" if p.characterized else "")
            )
        for v in r.violations[:5]:
            human.append(f"  counterexample: {v}")
    human.append(f"verdict: {body['verdict']}")
    _emit(args, body, human)
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_thresholds(args) -> int:
    kinds = KINDS if args.kind == "all" else (args.kind,)
    rows = []
    for kind in kinds:
        info = threshold_info(args.n, args.r, kind)
        rows.append({"kind": kind, "threshold": info.value, "condition": info.condition,
                     "remark_sourced": info.remark_sourced})
    body = {"task": "thresholds", "parameters": {"n": args.n, "r": args.r}, "verdict": "verified",
            "thresholds": rows, "counts": {}, "counterexamples": [], "seed": None, "elapsed_ms": None}
    human = [f"{row['kind']:<22} n={args.n} r={args.r}  min degree >= "
             f"{row['threshold'] if row['threshold'] is not None else 'uncovered'}  [{row['condition']}]"
             for row in rows]
    _emit(args, body, human)
    return EXIT_OK


def cmd_one_extendable(args) -> int:
    t0 = time.perf_counter()
    H = _load_hypergraph(args.file)
    if H.n < 3:
        raise UsageError("1-extendability needs n >= 3")
    rep = is_one_extendable(H)
    body = {
        "task": "one-extendable",
        "parameters": {"n": H.n, "r": H.r, "m": H.m},
        "verdict": "verified" if rep.extendable else "refuted",
        "counts": {"checked": rep.checked, "failing": len(rep.failing)},
        "counterexamples": [{"edge": e, "u": u, "w": w} for e, u, w in rep.failing],
        "seed": None,
        "elapsed_ms": _elapsed(t0),
    }
    human = [f"1-extendable: {rep.extendable} ({rep.checked} (edge, u, w) triples, {len(rep.failing)} failing)"]
    human += [f"  edge {e} with v1={u}, v2={w}: no hamiltonian cycle" for e, u, w in rep.failing[:20]]
    _emit(args, body, human)
    return EXIT_OK if rep.extendable else EXIT_REFUTED


def cmd_long_path(args) -> int:
    H = _load_hypergraph(args.file)
    return _report_exit(args, verify_long_path_lemma(H))


def cmd_info(args) -> int:
    H = _load_hypergraph(args.file)
    body = {"task": "info", "parameters": {"n": H.n, "r": H.r, "m": H.m}, "verdict": "verified",
            "counts": {"min_degree": min_degree(H), "degrees": H.degrees()}, "counterexamples": [],
            "seed": None, "elapsed_ms": None}
    _emit(args, body, [f"n={H.n} r={H.r} m={H.m} min degree {min_degree(H)}", f"degrees: {H.degrees()}"])
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _common(defaults: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--json", action="store_true", help="machine-readable report", **kw)
    p.add_argument("--deterministic", action="store_true",
                   help="reproducible witnesses and byte-identical output (no timings)", **kw)
    return p


def _family_args(p: argparse.ArgumentParser, positional: bool) -> None:
    names = [f.value for f in Family]
    if positional:
        p.add_argument("family", type=str.upper, choices=names)
    else:
        p.add_argument("--family", type=str.upper, choices=names, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--j", type=int, help="deleted tight-cycle edge index")
    p.add_argument("--j2", type=int, help="second deleted edge (H3P)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergeham", description=__doc__.splitlines()[0], parents=[_common(True)])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("gen", parents=[common], help="write an extremal construction as a hypergraph file")
    _family_args(p, positional=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", parents=[common], help="hamiltonian Berge path search")
    p.add_argument("file", nargs="?", default="-")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pair", nargs=2, type=int, metavar=("X", "Y"))
    g.add_argument("--all-pairs", action="store_true")
    p.add_argument("--out-dir", help="write one certificate file per found pair")
    p.add_argument("--no-prune", action="store_true", help="disable Hall-condition pruning")
    p.add_argument("--max-nodes", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cycle", parents=[common], help="hamiltonian Berge cycle search")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--max-nodes", type=int, default=0)
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("certify", parents=[common], help="validate a certificate file")
    p.add_argument("hypergraph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-sharpness", parents=[common], help="check an extremal example")
    _family_args(p, positional=False)
    p.set_defaults(func=cmd_verify_sharpness)

    p = sub.add_parser("verify-exhaustive", parents=[common], help="all labelled r-graphs above threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default=CONNECTED)
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    p.add_argument("--iso-reduce", action="store_true")
    p.set_defaults(func=cmd_verify_exhaustive)

    p = sub.add_parser("verify-sampled", parents=[common], help="seeded random r-graphs above threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--kind", choices=KINDS, default=CONNECTED)
    p.add_argument("--p", type=float, default=None, help="edge probability (default: expected degree ~ threshold+2)")
    p.set_defaults(func=cmd_verify_sampled)

    p = sub.add_parser("verify-lemmas", parents=[common], help="exhaustive graph-path lemma checks")
    p.add_argument("--lemma", choices=LEMMAS + ("all",), default="all")
    p.add_argument("--s-max", type=int, default=10)
    p.add_argument("--q-max", type=int, default=4)
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("thresholds", parents=[common], help="minimum-degree thresholds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=KINDS + ("all",), default="all")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("one-extendable", parents=[common], help="1-extendability check")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_one_extendable)

    p = sub.add_parser("long-path", parents=[common], help="longest x,y-path bound for every pair")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_long_path)

    p = sub.add_parser("info", parents=[common], help="degrees of a hypergraph file")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, HypergraphError, BadParameters, EnumerationTooLarge, ThresholdUncovered,
            SamplingStalled, HypothesisViolated, SameEndpoints, ValueError) as exc:
        print(f"bergeham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run_cli(argv: list[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
