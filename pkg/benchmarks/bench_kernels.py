"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one CSV row per (task, backend): best wall time over the repeats,
the result, and the speed-up of the compiled kernel.
"""

from __future__ import annotations

import argparse
import time

from cubepart import _backend
from cubepart.counting import biadjacency, piece_sets


def _tasks():
    cols5 = biadjacency(5)
    cols6 = biadjacency(6)
    cover4 = piece_sets(4, range(5))
    cover5m = piece_sets(5, [1])
    cover5 = piece_sets(5, range(6))
    return [
        # name, callable(kernel module)
        ("ryser d=5 (2^16 terms)", lambda k: k.ryser_partial(cols5, 16, 0, 1 << 16)),
        ("ryser d=6 slice (2^20 of 2^32 terms)", lambda k: k.ryser_partial(cols6, 32, 0, 1 << 20)),
        ("cover f(4)", lambda k: k.count_cover(16, cover4, 0, 16)),
        ("cover m(5)", lambda k: k.count_cover(32, cover5m, 0, 20)),
        ("cover f(5)", lambda k: k.count_cover(32, cover5, 0, 20)),
    ]


def _best(fn, kern, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(kern)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = _backend.available()
    if "compiled" not in backends:
        print("# compiled kernels not built; timing the Python fallback only")
    print("task,backend,seconds,result,speedup")
    for name, fn in _tasks():
        times = {}
        for b in backends:
            sec, res = _best(fn, _backend.get(b), args.repeat)
            times[b] = (sec, res)
        if len({res for _, res in times.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}: {times}")
        for b, (sec, res) in times.items():
            speed = times["python"][0] / sec if b == "compiled" else 1.0
            print(f"{name},{b},{sec:.4f},{res},{speed:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
