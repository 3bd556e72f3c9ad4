"""Benchmark the compiled kernels against the pure-Python fallback.

Two workloads drive everything expensive in the exhaustive sweeps:

* right-hull permanents (interval sizes for pattern-avoiding permutations),
* deletion-contraction chromatic polynomials of inversion graphs
  (region and orientation counts).

Usage: python benchmarks/bench_kernels.py [--n 7] [--repeat 3]
"""

from __future__ import annotations

import argparse
import itertools
import time

from invlat import _kernels_py
from invlat.bruhat import right_hull
from invlat.patterns import is_chromobruhatic
from invlat.permutation import InversionGraph, Permutation

try:
    from invlat import _kernels
except ImportError:
    _kernels = None


def hull_rows(n: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for word in itertools.permutations(range(1, n + 1)):
        w = Permutation(word)
        if is_chromobruhatic(w):
            out.append((right_hull(w).rows, n))
    return out


def inversion_masks(n: int) -> list[tuple]:
    return [
        (InversionGraph.of(Permutation(word)).adjacency_masks(),)
        for word in itertools.permutations(range(1, n + 1))
    ]


def bench(label: str, impls, workload, repeat: int) -> None:
    print(f"\n{label} ({len(workload)} instances)")
    reference = None
    timings = {}
    for name, fn in impls:
        best = float("inf")
        results = None
        for _ in range(repeat):
            started = time.perf_counter()
            results = [fn(*args) for args in workload]
            best = min(best, time.perf_counter() - started)
        timings[name] = best
        if reference is None:
            reference = results
        elif results != reference:
            raise SystemExit(f"implementation mismatch in {label}")
        print(f"  {name:<8} {best * 1000:9.1f} ms")
    if len(timings) == 2:
        py, cy = timings["python"], timings["cython"]
        print(f"  speedup  {py / cy:9.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7, help="board size for the sweeps")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    perm_impls = [("python", _kernels_py.ryser_permanent)]
    chrom_impls = [("python", _kernels_py.chromatic_coeffs)]
    if _kernels is not None:
        perm_impls.insert(0, ("cython", _kernels.ryser_permanent))
        chrom_impls.insert(0, ("cython", _kernels.chromatic_coeffs))
    else:
        print("compiled kernel not built; timing the fallback only")

    bench(
        f"right-hull permanents over the S_{args.n} avoiders",
        perm_impls,
        hull_rows(args.n),
        args.repeat,
    )
    bench(
        f"chromatic polynomials over all S_{args.n} inversion graphs (no cache)",
        chrom_impls,
        inversion_masks(args.n),
        args.repeat,
    )


if __name__ == "__main__":
    main()
