#!/usr/bin/env python3
"""Benchmark the jitted split-search kernels against the numpy fallbacks.

The same functions power gradient-boosting trees and boosting stumps; this
script times both paths on synthetic problems shaped like the real workloads
(a few thousand rows, a few hundred features).  Run:

    python benchmarks/bench_kernels.py --rows 6000 --features 400 --repeats 5

Setting SENTISTACK_NO_NUMBA=1 at package import time selects the numpy path
inside the library itself; this benchmark always times both explicitly.
"""

import argparse
import time

import numpy as np

from sentistack import kernels


def time_fn(fn, args, repeats, warmup=2):
    for _ in range(warmup):
        fn(*args)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_split(rows, features, repeats, rng):
    X = rng.normal(size=(rows, features))
    g = rng.normal(size=rows)
    order = kernels.presort(X)
    member = np.ones(rows, dtype=bool)
    member[rng.permutation(rows)[: rows // 3]] = False  # partial node, like depth 1
    args = (X, g, order, member, 2)
    results = {"numpy": time_fn(kernels.numpy_best_split, args, repeats)}
    if kernels.numba_best_split is not None:
        results["numba"] = time_fn(kernels.numba_best_split, args, repeats)
    return results


def bench_stump(rows, features, n_classes, repeats, rng):
    X = rng.normal(size=(rows, features))
    y = rng.integers(0, n_classes, size=rows)
    w = rng.uniform(0.5, 1.5, size=rows)
    w /= w.sum()
    order = kernels.presort(X)
    args = (X, y, w, order, n_classes)
    results = {"numpy": time_fn(kernels.numpy_best_stump, args, repeats)}
    if kernels.numba_best_stump is not None:
        results["numba"] = time_fn(kernels.numba_best_stump, args, repeats)
    return results


def bench_apply(rows, features, repeats, rng):
    X = rng.normal(size=(rows, features))
    # a full depth-3 tree: 7 internal nodes, 8 leaves
    feature = np.array([0, 1, 1, 2, 2, 2, 2, -1, -1, -1, -1, -1, -1, -1, -1], dtype=np.int64)
    threshold = np.concatenate([rng.normal(size=7), np.zeros(8)])
    left = np.array([1, 3, 5, 7, 9, 11, 13, -1, -1, -1, -1, -1, -1, -1, -1], dtype=np.int64)
    right = np.array([2, 4, 6, 8, 10, 12, 14, -1, -1, -1, -1, -1, -1, -1, -1], dtype=np.int64)
    value = np.concatenate([np.zeros(7), rng.normal(size=8)])
    args = (feature, threshold, left, right, value, X)
    results = {"numpy": time_fn(kernels.numpy_tree_apply, args, repeats)}
    if kernels.numba_tree_apply is not None:
        results["numba"] = time_fn(kernels.numba_tree_apply, args, repeats)
    return results


def report(name, results):
    numpy_time = results["numpy"]
    line = f"{name:<24} numpy {numpy_time * 1e3:9.2f} ms"
    if "numba" in results:
        numba_time = results["numba"]
        line += f"   numba {numba_time * 1e3:9.2f} ms   speedup {numpy_time / numba_time:6.2f}x"
    else:
        line += "   numba unavailable"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=6000)
    parser.add_argument("--features", type=int, default=400)
    parser.add_argument("--classes", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    print(
        f"rows={args.rows} features={args.features} classes={args.classes} "
        f"repeats={args.repeats} (best of) numba_active={kernels.USING_NUMBA}"
    )
    report("tree split search", bench_split(args.rows, args.features, args.repeats, rng))
    report("stump search", bench_stump(args.rows, args.features, args.classes, args.repeats, rng))
    report("tree apply", bench_apply(args.rows, args.features, args.repeats, rng))


if __name__ == "__main__":
    main()
