"""Compare the compiled and pure-Python kernel builds.

Times ``marcum`` on a fixed random sample under each backend (each in its
own interpreter, selected by ``MARCUM_BACKEND``) and reports the largest
relative disagreement between the two.

Usage::

    python benchmarks/bench_backends.py [--N 20000] [--A 1000] [--seed 7]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, sys, time
import numpy as np
import marcum
n, a, seed = int(sys.argv[1]), float(sys.argv[2]), int(sys.argv[3])
rng = np.random.default_rng(seed)
pts = list(zip(rng.uniform(1.0, a, n).tolist(), rng.uniform(0.0, a, n).tolist(),
               rng.uniform(0.0, a, n).tolist()))
t0 = time.perf_counter()
out = [marcum.marcum(mu, x, y) for mu, x, y in pts]
dt = time.perf_counter() - t0
vals = [min(r.p, r.q) for r in out]
methods = [r.method.value for r in out]
print(json.dumps({"backend": marcum.BACKEND, "seconds": dt, "values": vals, "methods": methods}))
"""


def run(backend: str, n: int, a: float, seed: int) -> dict:
    env = dict(os.environ, MARCUM_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", _WORKER, str(n), str(a), str(seed)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, default=20000)
    ap.add_argument("--A", type=float, default=1000.0)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    py = run("python", args.N, args.A, args.seed)
    cy = run("cython", args.N, args.A, args.seed)
    if cy["backend"] != "cython":
        print("compiled backend not available", file=sys.stderr)
        return 1
    worst = 0.0
    for a, b in zip(py["values"], cy["values"]):
        if a == b:
            continue
        worst = max(worst, abs(a - b) / max(abs(a), abs(b)))
    per = {}
    for m in py["methods"]:
        per[m] = per.get(m, 0) + 1
    print(f"points={args.N} A={args.A:g} seed={args.seed}")
    print(f"methods: {json.dumps(per, sort_keys=True)}")
    print(f"python  {py['seconds']:8.3f} s  {1e6 * py['seconds'] / args.N:8.1f} us/call")
    print(f"cython  {cy['seconds']:8.3f} s  {1e6 * cy['seconds'] / args.N:8.1f} us/call")
    print(f"speedup {py['seconds'] / cy['seconds']:.1f}x")
    print(f"max relative difference {worst:.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
