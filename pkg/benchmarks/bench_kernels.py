#!/usr/bin/env python3
"""Benchmark the compiled stepping kernels against the numpy fallback.

Times the two operations that dominate real workloads: the 256-rule
reversibility sweep at a fixed cell count, and bulk successor extraction for
a single rule. Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --n 12 16 20 --repeats 5
"""

from __future__ import annotations

import argparse
import time

from qeca import _kernels_py

try:
    from qeca import _kernels_c
except ImportError:
    _kernels_c = None


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        begin = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - begin)
    return best


def run(sizes: list[int], repeats: int):
    backends = [("numpy", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("compiled", _kernels_c))
    else:
        print("note: compiled extension not built; timing the fallback only\n")

    header = f"{'operation':<28}{'n':>4}" + "".join(
        f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        for label, call in [
            ("scan_rules (256 rules)", lambda mod, n=n: mod.scan_rules(n, True)),
            ("rule_outputs (rule 150)", lambda mod, n=n: mod.rule_outputs(150, n, True)),
        ]:
            times = [best_of(repeats, call, module) for _, module in backends]
            row = f"{label:<28}{n:>4}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2 and times[1] > 0:
                row += f"{times[0] / times[1]:>9.1f}x"
            print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[10, 14, 18, 20],
                        help="cell counts to benchmark")
    parser.add_argument("--repeats", type=int, default=3,
                        help="take the best of this many runs")
    args = parser.parse_args()
    run(args.n, args.repeats)


if __name__ == "__main__":
    main()
