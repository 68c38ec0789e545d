"""Byte-for-byte parity between the compiled and pure-Python kernels."""

import random

import pytest

from turantools import _core_py
from turantools.graphs import complete_graph, empty_graph, turan_graph

from oracles import random_graph

try:
    from turantools import _core
except ImportError:  # pure-Python install
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled kernels not built")

BACKENDS = [_core_py] if _core is None else [_core_py, _core]


@needs_core
def test_backend_names():
    assert _core_py.BACKEND == "python"
    assert _core.BACKEND == "cython"


@needs_core
def test_canonical_parity_random():
    rng = random.Random(1234)
    for _ in range(300):
        n = rng.randint(0, 9)
        g = random_graph(rng, n, p=rng.choice([0.2, 0.5, 0.8]))
        bc, oc = _core.canonical_labeling(n, g.adj)
        bp, op = _core_py.canonical_labeling(n, g.adj)
        assert bc == bp
        assert sorted(oc) == sorted(op) == list(range(n))


@needs_core
def test_canonical_parity_symmetric_families():
    for g in [
        complete_graph(9),
        empty_graph(9),
        turan_graph(10, 2),
        turan_graph(10, 5),
        turan_graph(9, 3),
    ]:
        assert _core.canonical_bytes(g.n, g.adj) == _core_py.canonical_bytes(g.n, g.adj)


@needs_core
def test_containment_parity():
    rng = random.Random(99)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9))
        f = random_graph(rng, rng.randint(1, 6))
        assert _core.contains_subgraph(
            g.n, g.adj, f.n, f.adj
        ) == _core_py.contains_subgraph(g.n, g.adj, f.n, f.adj)
        anchor = rng.randrange(g.n)
        assert _core.contains_subgraph_anchored(
            g.n, g.adj, f.n, f.adj, anchor
        ) == _core_py.contains_subgraph_anchored(g.n, g.adj, f.n, f.adj, anchor)


@needs_core
def test_augment_parity():
    rng = random.Random(5)
    k3 = complete_graph(3)
    for _ in range(80):
        n = rng.randint(1, 6)
        g = random_graph(rng, n)
        canon = _core.canonical_bytes(n, g.adj)
        assert _core.augment_children(n, g.adj, canon, 0, ()) == _core_py.augment_children(
            n, g.adj, canon, 0, ()
        )
        assert _core.augment_children(
            n, g.adj, canon, k3.n, k3.adj
        ) == _core_py.augment_children(n, g.adj, canon, k3.n, k3.adj)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_labeling_reconstructs_graph(backend):
    # the packed triangle under the returned order must reproduce the form
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 8)
        g = random_graph(rng, n)
        form, order = backend.canonical_labeling(n, g.adj)
        perm = [0] * n
        for pos, v in enumerate(order):
            perm[v] = pos
        relabeled = g.relabel(perm)
        assert backend.canonical_bytes(n, relabeled.adj) == form
        # and the canonical graph packs exactly to the form
        bits = []
        for j in range(1, n):
            for i in range(j):
                bits.append(relabeled.has_edge(i, j))
        packed = bytearray((len(bits) + 7) // 8)
        for t, b in enumerate(bits):
            if b:
                packed[t >> 3] |= 0x80 >> (t & 7)
        assert bytes(packed) == form


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND)
def test_size_guard(backend):
    with pytest.raises(ValueError):
        backend.augment_children(64, tuple([0] * 64), b"", 0, ())
