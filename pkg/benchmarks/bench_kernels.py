"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Part one times the sparse kernels on random inputs.  Part two times a full
``E_lambda`` table in a subprocess under each implementation.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from heckemac import _pykernels

try:
    from heckemac import _speedups
except ImportError:
    _speedups = None


def random_scalar(rng, nvars, terms):
    return {tuple(rng.randint(-4, 4) for _ in range(nvars)): Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 3))
            for _ in range(terms)}


def random_element(rng, rank, nvars, size):
    return {tuple(rng.randint(-5, 5) for _ in range(rank)): random_scalar(rng, nvars, 3) for _ in range(size)}


def kernel_cases(seed=0):
    rng = random.Random(seed)
    f = random_element(rng, 2, 3, 60)
    g = random_element(rng, 2, 3, 20)
    t = {(0, 2, 0): 1}
    tm1 = {(0, 2, 0): 1, (0, 0, 0): -1}
    alpha = (2, -1)
    a, b = random_scalar(rng, 3, 30), random_scalar(rng, 3, 30)
    return {
        "p_mul": lambda k: k.p_mul(a, b),
        "g_mul": lambda k: k.g_mul(f, g),
        "dl_apply": lambda k: k.dl_apply(f, 0, alpha, t, tm1),
    }


def bench_kernels(repeat):
    impls = [("python", _pykernels)] + ([("cython", _speedups)] if _speedups else [])
    print(f"{'kernel':<12}" + "".join(f"{name:>14}" for name, _ in impls))
    for name, fn in kernel_cases().items():
        row = []
        for _, mod in impls:
            row.append(min(timeit.repeat(lambda: fn(mod), number=20, repeat=repeat)) / 20)
        print(f"{name:<12}" + "".join(f"{1e3 * x:>12.3f}ms" for x in row))


def bench_end_to_end(args):
    cmd = [sys.executable, "-m", "heckemac", "E", *args, "--out", os.devnull]
    out = {}
    for label, env_value in [("python", "1"), ("default", "0")]:
        env = dict(os.environ, HECKEMAC_PURE_PYTHON=env_value)
        t = timeit.timeit(lambda: subprocess.run(cmd, env=env, check=True), number=1)
        out[label] = t
    print(f"E {' '.join(args)}: python {out['python']:.2f}s, default {out['default']:.2f}s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ns = ap.parse_args()
    if _speedups is None:
        print("compiled extension not built; timing the fallback only")
    bench_kernels(ns.repeat)
    bench_end_to_end(["--type", "B", "--rank", "2", "--box", "3"])
    bench_end_to_end(["--type", "G", "--rank", "2", "--box", "2"])


if __name__ == "__main__":
    main()
