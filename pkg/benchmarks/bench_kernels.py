"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat R]

The end-to-end rows run in a subprocess per backend, because the backend is
fixed at import time.
"""

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from qmobius import _kernels_py

try:
    from qmobius import _ckernels
except ImportError:
    _ckernels = None

N = 400


def _cases():
    ints = [(-1) ** k * (k % 7 + 1) for k in range(N + 1)]
    unit = [1] + ints[1:]
    fracs = [Fraction(k % 5 - 2, k % 3 + 1) for k in range(N + 1)]
    fracs_unit = [Fraction(3, 2)] + fracs[1:]
    fracs_exp = [Fraction(0)] + [Fraction(-1, k) for k in range(1, 201)]
    seq = [0] + list(range(1, 5001))
    return {
        "convolve": lambda m: m.convolve(ints, ints, N),
        "divide": lambda m: m.divide(ints, unit, N, 1),
        "rconvolve": lambda m: m.rconvolve(fracs, fracs, 200),
        "rdivide": lambda m: m.rdivide(fracs, fracs_unit, 200),
        "rexp": lambda m: m.rexp(fracs_exp, 200),
        "dirichlet_convolve": lambda m: m.dirichlet_convolve(seq, seq, 5000),
        "mobius_sieve": lambda m: m.mobius_sieve(10**6),
        "pentagonal_partition_numbers": lambda m: m.pentagonal_partition_numbers(2000),
    }


END_TO_END = {
    "prod_pow(1, 500)": "from qmobius.fps import prod_pow; prod_pow(lambda n: 1, 500)",
    "verify theorem1 N=200": "from qmobius.identities import verify_theorem1; verify_theorem1(200)",
}


def _subprocess_time(stmt, pure, repeat):
    env = dict(os.environ)
    env.pop("QMOBIUS_PURE_PYTHON", None)
    if pure:
        env["QMOBIUS_PURE_PYTHON"] = "1"
    code = (
        "import time\n"
        "best = float('inf')\n"
        f"for _ in range({repeat}):\n"
        "    t = time.perf_counter()\n"
        f"    exec({stmt!r}, {{}})\n"
        "    best = min(best, time.perf_counter() - t)\n"
        "print(best)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled extension not built; only the Python timings are shown")
    print(f"{'kernel':32} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, run in _cases().items():
        py = min(timeit.repeat(lambda: run(_kernels_py), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:32} {py:11.4f} {'-':>11} {'-':>8}")
            continue
        assert run(_kernels_py) == run(_ckernels), name
        cy = min(timeit.repeat(lambda: run(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:32} {py:11.4f} {cy:11.4f} {py / cy:7.1f}x")
    for name, stmt in END_TO_END.items():
        py = _subprocess_time(stmt, True, args.repeat)
        if _ckernels is None:
            print(f"{name:32} {py:11.4f} {'-':>11} {'-':>8}")
            continue
        cy = _subprocess_time(stmt, False, args.repeat)
        print(f"{name:32} {py:11.4f} {cy:11.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
