"""Compare the compiled and pure-Python term kernels.

Each backend runs in its own interpreter (the kernel is chosen at import):

    python benchmarks/bench_kernel.py            # both backends, table
    python benchmarks/bench_kernel.py --repeat 5
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "matrep" / "data"

WORKLOADS = [
    ("fano", 0, False),
    ("fano", 2, True),
    ("nonpappus", 0, False),
    ("nonpappus", 2, False),
    ("gf4_order9", 2, True),
    ("bases_contradiction", 0, False),
]


def _worker(repeat: int) -> dict:
    from matrep.cli import parse_matroid
    from matrep.decide import build_system, decide, decide_over_char, prepare
    from matrep.groebner import buchberger_integer
    from matrep.polyring import BACKEND, GF, PolyRing
    from matrep.polyring import kernel

    out = {"backend": BACKEND, "timings": {}}

    def best(fn):
        ts = []
        for _ in range(repeat):
            t = time.perf_counter()
            fn()
            ts.append(time.perf_counter() - t)
        return min(ts)

    for name, p, exact in WORKLOADS:
        M = parse_matroid((DATA / f"{name}.txt").read_text())
        prep = prepare(M)
        label = f"{name} char {p}{' exact' if exact else ''}"
        out["timings"][label] = best(lambda: decide_over_char(prep, p, exact))

    for name in ("fano", "gf4_order9"):
        system = build_system(prepare(parse_matroid((DATA / f"{name}.txt").read_text())))
        out["timings"][f"{name} integer engine"] = best(lambda: buchberger_integer(system.generators()))

    # raw multiplication of dense-ish polynomials mod p
    R = PolyRing([f"x{i}" for i in range(6)], GF(32003))
    f = sum((R.var(f"x{i}") + i + 1 for i in range(6)), R.zero) ** 3
    g = f + R.one
    out["timings"]["mul 6 vars deg 3 squared"] = best(lambda: kernel.mul(f.terms, g.terms, R.off, R.p))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if args.worker:
        json.dump(_worker(args.repeat), sys.stdout)
        return 0

    results = {}
    for label, env in (("cython", {}), ("python", {"MATREP_PURE_PYTHON": "1"})):
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env={**os.environ, **env},
            capture_output=True,
            text=True,
            check=True,
        )
        data = json.loads(proc.stdout)
        if data["backend"] != label:
            print(f"note: requested {label}, got {data['backend']} (extension not built?)", file=sys.stderr)
        results[label] = data
    if args.json:
        json.dump(results, sys.stdout, indent=2)
        print()
        return 0

    rows = list(results["python"]["timings"])
    width = max(len(r) for r in rows)
    c_name, p_name = results["cython"]["backend"], results["python"]["backend"]
    print(f"{'workload'.ljust(width)}  {c_name:>9}  {p_name:>9}  speedup")
    for r in rows:
        c = results["cython"]["timings"][r]
        p = results["python"]["timings"][r]
        print(f"{r.ljust(width)}  {c * 1e3:8.2f}ms {p * 1e3:8.2f}ms  {p / c:6.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
