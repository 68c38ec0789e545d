"""Forbidden-graph specifications and the machinery behind "F-free".

The spec grammar, also used verbatim on the command line:

* ``K<s>``      complete graph on s >= 2 vertices
* ``F<k>``      k triangles sharing exactly one common vertex
* ``F<k>,<s>``  k copies of K_s (s >= 3) sharing a single vertex
* ``g6:<str>``  arbitrary graph given as graph6

Containment is subgraph containment (not induced): G contains F iff
some injection of V(F) into V(G) maps every edge of F onto an edge of
G.  F does not need to be connected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import _kernels
from .errors import ParseError, SizeCapError
from .graphs import Graph, complete_graph, from_graph6

CHROMATIC_CAP = 12

_K_RE = re.compile(r"^K(\d+)$")
_F_RE = re.compile(r"^F(\d+)$")
_FKR_RE = re.compile(r"^F(\d+),(\d+)$")


@dataclass(frozen=True)
class ForbiddenSpec:
    """A parsed forbidden graph with its derived coloring data.

    ``r = chi - 1`` is the class count of the Turan graphs that
    edge-extremal F-free graphs approximate.
    """

    source: str
    graph: Graph
    chi: int
    r: int
    name: str | None = None


def intersecting_cliques(k: int, s: int) -> Graph:
    """k copies of K_s glued at a single shared vertex."""
    if k < 1 or s < 2:
        raise ValueError(f"need k >= 1 and s >= 2, got k={k}, s={s}")
    edges = []
    for copy in range(k):
        block = [0] + [1 + copy * (s - 1) + i for i in range(s - 1)]
        edges.extend(
            (block[i], block[j]) for i in range(s) for j in range(i + 1, s)
        )
    return Graph(1 + k * (s - 1), edges)


def friendship_graph(k: int) -> Graph:
    """k triangles sharing exactly one common vertex (k=2: bowtie)."""
    return intersecting_cliques(k, 3)


def parse_forbidden(spec: str) -> ForbiddenSpec:
    """Parse a forbidden-graph spec string into a ForbiddenSpec."""
    token = spec.strip()
    if m := _K_RE.match(token):
        s = int(m.group(1))
        if s < 2:
            raise ParseError(f"complete graph needs s >= 2 in {token!r}")
        return ForbiddenSpec(token, complete_graph(s), chi=s, r=s - 1, name=token)
    if m := _F_RE.match(token):
        k = int(m.group(1))
        if k < 1:
            raise ParseError(f"need k >= 1 in {token!r}")
        return ForbiddenSpec(token, friendship_graph(k), chi=3, r=2, name=token)
    if m := _FKR_RE.match(token):
        k, s = int(m.group(1)), int(m.group(2))
        if k < 1:
            raise ParseError(f"need k >= 1 in {token!r}")
        if s < 3:
            raise ParseError(f"clique size must be >= 3 in {token!r}")
        return ForbiddenSpec(token, intersecting_cliques(k, s), chi=s, r=s - 1, name=token)
    if token.startswith("g6:"):
        body = token[3:]
        try:
            graph = from_graph6(body)
        except ParseError as exc:
            raise ParseError(f"bad graph6 in {token!r}: {exc}", offset=exc.offset) from exc
        if graph.m == 0:
            raise ParseError(f"forbidden graph must have at least one edge: {token!r}")
        chi = chromatic_number(graph)
        return ForbiddenSpec(token, graph, chi=chi, r=chi - 1)
    raise ParseError(
        f"unknown forbidden-graph spec {token!r} "
        "(expected K<s>, F<k>, F<k>,<s>, or g6:<graph6>)"
    )


def contains_subgraph(g: Graph, pattern: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph copy of pattern."""
    if g.n > 64:
        raise SizeCapError(f"containment caps the host at 64 vertices, got {g.n}")
    if pattern.n > g.n or pattern.m > g.m:
        return False
    return _kernels.contains_subgraph(g.n, g.adj, pattern.n, pattern.adj)


def is_free(g: Graph, spec: ForbiddenSpec) -> bool:
    return not contains_subgraph(g, spec.graph)


# ---------------------------------------------------------------------------
# exact chromatic number (branch and bound)
# ---------------------------------------------------------------------------


def _greedy_coloring_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    colors = {}
    used = 0
    for v in order:
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def _max_clique_bound(g: Graph) -> int:
    best = 0

    def extend(clique_size, candidates):
        nonlocal best
        if clique_size + candidates.bit_count() <= best:
            return
        if candidates == 0:
            best = max(best, clique_size)
            return
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            if clique_size + 1 + (candidates & g.adj[v]).bit_count() <= best:
                continue
            extend(clique_size + 1, candidates & g.adj[v])

    extend(0, (1 << g.n) - 1)
    return best


def _is_k_colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=g.degree, reverse=True)
    colors = [-1] * g.n

    def rec(i, used):
        if i == g.n:
            return True
        v = order[i]
        cap = min(k, used + 1)  # new colors introduced in order
        for c in range(cap):
            if any(colors[u] == c for u in g.neighbors(v)):
                continue
            colors[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact vertex chromatic number; clique and greedy bounds prune."""
    if g.n > CHROMATIC_CAP:
        raise SizeCapError(
            f"exact chromatic number caps n at {CHROMATIC_CAP}, got {g.n}"
        )
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    lower = _max_clique_bound(g)
    upper = _greedy_coloring_bound(g)
    for k in range(lower, upper):
        if _is_k_colorable(g, k):
            return k
    return upper
