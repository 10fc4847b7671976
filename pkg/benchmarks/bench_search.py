"""Compare the compiled kernels against the pure-Python fallback.

Each backend runs in its own interpreter because the switch is read at import
time. Compilation is excluded: every workload runs once to warm up, then the
best of ``--repeat`` timings is reported.

    python3 benchmarks/bench_search.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "connected C'(8,4,8)": "is_hamiltonian_connected(build_c_prime(8, 4, 8))",
    "connected H2P(8,3)": "is_hamiltonian_connected(build(ConstructionSpec(Family.H2P, 8, 3))[0])",
    "refute H2P(10,4)": "is_hamiltonian_connected(build(ConstructionSpec(Family.H2P, 10, 4))[0])",
    "cycle C(9,4)": "find_hamiltonian_cycle(build_tight_cycle(9, 4))",
    "longest H4 all pairs": "[longest_path_between(build(ConstructionSpec(Family.H4))[0], x, y) for x in range(1, 6) for y in range(x + 1, 6)]",
    "exhaustive (5,3)": "exhaustive_verify(5, 3)",
    "sampled (7,4) x200": "sampled_verify(7, 4, 200)",
    "lemma ver_new s<=8": "exhaust_lemma('ver_new', 8, 3)",
}

CHILD = r"""
import json, sys, time
from bergeham._accel import backend
from bergeham.constructions import ConstructionSpec, Family, build, build_c_prime, build_tight_cycle
from bergeham.search import find_hamiltonian_cycle, is_hamiltonian_connected, longest_path_between
from bergeham.harness import exhaustive_verify, sampled_verify
from bergeham.lemmas import exhaust_lemma
workloads = json.loads(sys.argv[1]); repeat = int(sys.argv[2])
out = {"backend": backend(), "times": {}}
for name, expr in workloads.items():
    eval(expr)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter(); eval(expr); best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("BERGEHAM_PURE_PYTHON", None)
    if pure:
        env["BERGEHAM_PURE_PYTHON"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", CHILD, json.dumps(WORKLOADS), str(repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    rows = []
    for name in WORKLOADS:
        a, b = fast["times"][name], slow["times"][name]
        rows.append({"workload": name, fast["backend"]: a, "python": b, "speedup": b / a if a > 0 else None})
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'workload':<24} {fast['backend'] + ' (s)':>12} {'python (s)':>12} {'speedup':>9}")
    for row in rows:
        print(f"{row['workload']:<24} {row[fast['backend']]:>12.4f} {row['python']:>12.4f} {row['speedup']:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
