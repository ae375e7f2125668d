#!/usr/bin/env python3
"""Benchmark the enumeration kernels: compiled extension vs pure Python.

Both backends must produce identical canonical table sets; the script
asserts that before reporting timings.  Run from an installed tree:

    python3 benchmarks/bench_enum.py [--max-n 7] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from effectalg import _tablesearch_py


def _load_compiled():
    try:
        from effectalg import _tablesearch

        return _tablesearch
    except ImportError:
        return None


def bench(fn, n: int, repeat: int) -> tuple[float, list]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(n)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    compiled = _load_compiled()
    if compiled is None:
        print("compiled kernel not built; showing pure-Python timings only")

    header = f"{'n':>3} {'algebras':>9} {'pure':>12}"
    if compiled:
        header += f" {'compiled':>12} {'speedup':>9}"
    print(header)
    for n in range(4, args.max_n + 1):
        tp, rp = bench(_tablesearch_py.search_tables, n, args.repeat)
        line = f"{n:>3} {len(rp):>9} {tp * 1000:>10.1f}ms"
        if compiled:
            tc, rc = bench(compiled.search_tables, n, args.repeat)
            assert rc == rp, f"backends disagree at n={n}"
            line += f" {tc * 1000:>10.1f}ms {tp / tc:>8.0f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
