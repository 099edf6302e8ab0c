"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel runs on the same inputs through both modules; the results are
compared before timing so a speedup is only reported for agreeing output.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from prepea import _kernels_py
from prepea.canon import _parts, _table_array
from prepea.fixtures import fixture_model

try:
    from prepea import _kernels
except ImportError:  # extension not built
    _kernels = None


def _cases():
    big = fixture_model("ex-6-4-lmodrip")
    leq = np.array(big.order_relation(), dtype=np.uint8)
    plus = _table_array(big.plus)
    rminus = _table_array(big.rminus)
    _, tables, maps, rels, perms = _parts(big)
    return [
        ("assoc_scan n=7", "assoc_scan", (plus,)),
        ("residuation_scan n=7", "residuation_scan", (plus, rminus, leq, True)),
        ("min_encoding n=7 (%d perms)" % len(perms), "min_encoding", (tables, maps, rels, perms)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels unavailable; nothing to compare")
        return
    print(f"{'kernel':<34}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for label, name, inputs in _cases():
        py, cy = getattr(_kernels_py, name), getattr(_kernels, name)
        if py(*inputs) != cy(*inputs):
            raise SystemExit(f"{name}: backends disagree")
        number = 3
        t_py = min(timeit.repeat(lambda: py(*inputs), number=number, repeat=args.repeat)) / number
        number = max(3, int(0.05 / max(t_py / 50, 1e-7)))
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=number, repeat=args.repeat)) / number
        print(f"{label:<34}{t_py * 1e3:>12.3f}{t_cy * 1e3:>12.4f}{t_py / t_cy:>9.0f}x")
    print()
    print("end to end, all 5-element generalized models:")
    for label, env in (("python", {"PREPEA_PURE": "1"}), ("cython", {})):
        code = ("import time; from prepea.enumeration import all_gppea; t = time.perf_counter(); "
                "k = len(all_gppea(5)); print(k, round(time.perf_counter() - t, 2))")
        out = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env, "PREPEA_WORKERS": "1"},
                             capture_output=True, text=True, check=True).stdout.split()
        print(f"  {label:<8} {out[0]} models in {out[1]} s")


if __name__ == "__main__":
    main()
