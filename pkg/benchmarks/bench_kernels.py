#!/usr/bin/env python3
"""Benchmark the compiled bit kernels against the pure-Python twin.

Times the three hot operations (canonical labeling, subgraph
containment, canonical augmentation) and a full triangle-free
enumeration driven through each backend.

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from turantools import _core_py
from turantools.graphs import complete_graph, turan_graph
from turantools.patterns import friendship_graph

try:
    from turantools import _core
except ImportError:
    _core = None


def _random_adj(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return tuple(rows)


def _timeit(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def bench_canonical(kernel, corpus):
    def run():
        acc = 0
        for n, adj in corpus:
            acc ^= len(kernel.canonical_bytes(n, adj))
        return acc

    return _timeit(run)


def bench_contains(kernel, hosts, pattern):
    fn, fadj = pattern

    def run():
        hits = 0
        for n, adj in hosts:
            hits += kernel.contains_subgraph(n, adj, fn, fadj)
        return hits

    return _timeit(run)


def enumerate_classes(kernel, n, pattern=None):
    """Level-by-level canonical augmentation driven through one backend."""
    fn, fadj = pattern if pattern else (0, ())
    level = [((0,), kernel.canonical_bytes(1, (0,)))]
    for size in range(1, n):
        nxt = []
        for adj, canon in level:
            nxt.extend(kernel.augment_children(size, adj, canon, fn, fadj))
        nxt.sort(key=lambda t: t[1])
        level = nxt
    return len(level)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args(argv)

    if _core is None:
        print("compiled kernels are not built; nothing to compare against")
        return 1

    rng = random.Random(12345)
    canon_n = 9 if not args.quick else 7
    corpus = [
        (canon_n, _random_adj(rng, canon_n, p))
        for p in (0.2, 0.5, 0.8)
        for _ in range(200 if not args.quick else 40)
    ]
    corpus += [
        (g.n, g.adj)
        for g in (complete_graph(canon_n), turan_graph(canon_n, 3))
        for _ in range(50)
    ]
    hosts = [(9, _random_adj(rng, 9, 0.5)) for _ in range(2000 if not args.quick else 300)]
    bowtie_graph = friendship_graph(2)
    bowtie = (bowtie_graph.n, bowtie_graph.adj)
    gen_n = 8 if not args.quick else 7
    k3 = complete_graph(3)

    rows = []

    t_py, _ = bench_canonical(_core_py, corpus)
    t_cy, _ = bench_canonical(_core, corpus)
    rows.append((f"canonical labeling ({len(corpus)} graphs, n={canon_n})", t_py, t_cy))

    t_py, hits_py = bench_contains(_core_py, hosts, bowtie)
    t_cy, hits_cy = bench_contains(_core, hosts, bowtie)
    assert hits_py == hits_cy
    rows.append((f"bowtie containment ({len(hosts)} hosts, n=9)", t_py, t_cy))

    t_py, count_py = _timeit(lambda: enumerate_classes(_core_py, gen_n, (k3.n, k3.adj)))
    t_cy, count_cy = _timeit(lambda: enumerate_classes(_core, gen_n, (k3.n, k3.adj)))
    assert count_py == count_cy
    rows.append((f"triangle-free enumeration to n={gen_n} ({count_py} classes)", t_py, t_cy))

    t_py, count_py = _timeit(lambda: enumerate_classes(_core_py, gen_n - 1))
    t_cy, count_cy = _timeit(lambda: enumerate_classes(_core, gen_n - 1))
    assert count_py == count_cy
    rows.append((f"unpruned enumeration to n={gen_n - 1} ({count_py} classes)", t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for name, t_py, t_cy in rows:
        print(f"{name.ljust(width)}  {t_py:>9.3f}s  {t_cy:>9.3f}s  {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
