"""Benchmark the compiled enumeration kernels against the pure-Python
fallback on representative workloads.

Run as: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from shadowcodes import FiniteField, ShadowCodeSpec, build, enumerate_monic_irreducibles
from shadowcodes._kernels import _pure, pack_rows

try:
    from shadowcodes._kernels import _speedups
except ImportError:
    _speedups = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def binary_case(q, L):
    f = FiniteField(q)
    spec = ShadowCodeSpec(f, 2, enumerate_monic_irreducibles(f, 2, L))
    G = build(spec)
    packed = pack_rows(G.rows)
    rows = {}
    t, (counts_p, first_p) = _time(_pure.weight_enum_r2, packed, G.n)
    rows["python"] = t
    if _speedups is not None:
        t, (counts_c, first_c) = _time(_speedups.weight_enum_r2, packed, G.n)
        rows["cython"] = t
        assert (counts_p == counts_c).all() and (first_p == first_c).all()
    return f"binary enumeration q={q} L={L} (2^{L} codewords)", rows


def generic_case(q, r, L):
    f = FiniteField(q)
    spec = ShadowCodeSpec(f, r, enumerate_monic_irreducibles(f, 2, L))
    G = build(spec)
    rows = {}
    t, (counts_p, first_p) = _time(_pure.weight_enum_modr, G.rows, r)
    rows["python"] = t
    if _speedups is not None:
        t, (counts_c, first_c) = _time(_speedups.weight_enum_modr, G.rows, r)
        rows["cython"] = t
        assert (counts_p == counts_c).all() and (first_p == first_c).all()
    return f"ternary enumeration q={q} r={r} L={L} (3^{L} codewords)", rows


def main():
    cases = [
        binary_case(10007, 16),
        binary_case(1009, 13),
        generic_case(151, 3, 9),
    ]
    width = max(len(name) for name, _ in cases)
    print(f"{'case':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for name, rows in cases:
        py = rows["python"]
        if "cython" in rows:
            cy = rows["cython"]
            print(f"{name:<{width}}  {py:>9.3f}s  {cy:>9.3f}s  {py / cy:>7.1f}x")
        else:
            print(f"{name:<{width}}  {py:>9.3f}s  {'n/a':>10}  {'n/a':>8}")


if __name__ == "__main__":
    main()
