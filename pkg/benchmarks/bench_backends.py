#!/usr/bin/env python3
"""Compare the compiled (numba) and pure kernel backends on the hot paths.

Each backend runs in its own subprocess because the backend is fixed at
import time via PERMCODES_BACKEND.  Every workload is executed once for
warm-up (which absorbs jit compilation) and once for timing.

Usage:
    python benchmarks/bench_backends.py [--quick]
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time

from permcodes._backend import BACKEND
from permcodes.analysis import CompositionSpec, cycle_spectrum, h_fixed_count
from permcodes.bijections import EncodingId as E
from permcodes.stochastic import EwensParams, Process, simulate

n_spectrum, n_h, trials = json.loads(sys.argv[1])
timings = {}

def timed(label, fn):
    fn()
    start = time.perf_counter()
    fn()
    timings[label] = time.perf_counter() - start

timed(f"cycle_spectrum (f2,f3) n={n_spectrum}",
      lambda: cycle_spectrum(CompositionSpec(E.F2, E.F3, n_spectrum)))
timed(f"h_fixed_count n={n_h}", lambda: h_fixed_count(n_h))
timed(f"simulate crp n=6 trials={trials}",
      lambda: simulate(Process.CRP, EwensParams(theta=1.0, n=6), trials, seed=1))
print(json.dumps({"backend": BACKEND, "timings": timings}))
"""


def run_backend(backend: str, sizes) -> dict:
    env = dict(os.environ, PERMCODES_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", CHILD, json.dumps(sizes)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="small sizes for a fast smoke run")
    args = parser.parse_args()
    sizes = (6, 7, 20_000) if args.quick else (8, 9, 200_000)

    try:
        import numba  # noqa: F401
        backends = ["numba", "pure"]
    except ImportError:
        print("numba not importable; timing the pure backend only")
        backends = ["pure"]

    results = {b: run_backend(b, sizes) for b in backends}
    labels = list(results[backends[0]]["timings"])
    width = max(len(lb) for lb in labels)
    header = f"{'workload':<{width}} " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for lb in labels:
        row = f"{lb:<{width}} "
        times = [results[b]["timings"][lb] for b in backends]
        row += "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
