"""Time the hot kernels with and without numba.

Each route runs in its own interpreter because the acceleration switch is
read at import time. Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, timeit
import numpy as np
import geneuler
from geneuler import _kernels as k
from geneuler.companion import exp_n
from geneuler.cubic import CubicUnit, eval_a

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
thetas = np.linspace(-10, 10, 2000)
poly = np.concatenate([[1.0], rng.uniform(-2, 2, 8)]).astype(complex)
mat = rng.uniform(-1, 1, (6, 6))
q = rng.normal(size=(5, 5))
cases = {
    "tlf_table (2000 angles)": lambda: k.tlf_table(0.3, -1.2, thetas),
    "aberth_roots (degree 8)": lambda: k.aberth_roots(poly, 200, 1e-14),
    "taylor_expm (6x6)": lambda: k.taylor_expm(mat, 20, 0.5),
    "interleaved_series (theta=20)": lambda: k.interleaved_series(3, 1, 20.0, 1e-17),
    "eval_a (cubic)": lambda: eval_a(CubicUnit(0.7, -0.3, 1.1), 0.9),
    "exp_n (5x5)": lambda: exp_n(q, 0.5),
}
out = {"numba": geneuler.USE_NUMBA, "times": {}}
for name, fn in cases.items():
    fn()  # compile / warm caches
    timer = timeit.Timer(fn)
    loops, _ = timer.autorange()
    out["times"][name] = min(timer.repeat(repeat, loops)) / loops
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("GENEULER_DISABLE_NUMBA", None)
    if disable:
        env["GENEULER_DISABLE_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if not fast["numba"]:
        print("numba unavailable; both columns use the python route", file=sys.stderr)
    print(f"{'kernel':32s} {'numba':>12s} {'python':>12s} {'speedup':>8s}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:32s} {t_fast * 1e6:10.1f}us {t_slow * 1e6:10.1f}us {t_slow / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
