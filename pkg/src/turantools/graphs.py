"""Immutable simple graphs with bitset adjacency, builders, and graph6.

Vertices are ``0..n-1``; adjacency is one integer bitmask per vertex.
Graphs are values: every operation returns a new instance, so they can
be shared freely across threads and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernels
from .errors import ParseError, SizeCapError

BITSET_CAP = 64  # combinatorial kernels keep one machine word per row


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))
        object.__setattr__(self, "m", sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def from_adj(cls, rows: tuple[int, ...]) -> "Graph":
        """Wrap prevalidated adjacency rows (internal fast path)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "adj", tuple(rows))
        object.__setattr__(g, "m", sum(r.bit_count() for r in rows) // 2)
        return g

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- queries ----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.adj[v]
        while row:
            u = (row & -row).bit_length() - 1
            yield u
            row &= row - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            while row:
                v = (row & -row).bit_length() - 1 + u + 1
                yield (u, v)
                row &= row - 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not (self.adj[u] >> v) & 1:
                    yield (u, v)

    def connected_components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.adj[v] & ~comp
                comp |= new
                frontier |= new
            seen |= comp
            comps.append([v for v in range(self.n) if (comp >> v) & 1])
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- derived graphs ----------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_adj(tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_adj(tuple(rows))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under ``v -> perm[v]``."""
        perm = list(perm)
        rows = [0] * self.n
        for u in range(self.n):
            row = self.adj[u]
            nr = 0
            while row:
                v = (row & -row).bit_length() - 1
                nr |= 1 << perm[v]
                row &= row - 1
            rows[perm[u]] = nr
        return Graph.from_adj(tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        verts = sorted(vertices)
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            row = self.adj[v]
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph.from_adj(tuple(rows))


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_adj(tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Iterable[int]) -> Graph:
    """Complete multipartite graph with the given class sizes.

    Edges join exactly the pairs in distinct classes, so the edge count
    is (n^2 - sum of squared sizes) / 2.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("part sizes must be a nonempty list")
    if any(p <= 0 for p in parts):
        raise ValueError(f"part sizes must be positive, got {parts}")
    n = sum(parts)
    masks = []
    start = 0
    for p in parts:
        masks.append(((1 << p) - 1) << start)
        start += p
    full = (1 << n) - 1
    rows = []
    for mask in masks:
        row = full & ~mask
        for v in range(n):
            if (mask >> v) & 1:
                rows.append((v, row))
    rows.sort()
    return Graph.from_adj(tuple(r for _, r in rows))


def turan_parts(n: int, r: int) -> list[int]:
    """Balanced part sizes: ``n mod r`` parts of size ceil(n/r), rest floor."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    q, k = divmod(n, r)
    return [q + 1] * k + [q] * (r - k)


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph with part sizes as equal as possible."""
    return complete_multipartite(turan_parts(n, r))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph.from_adj(tuple(rows))


# ---------------------------------------------------------------------------
# graph6 codec (McKay format: 63-offset 6-bit groups, column-major triangle)
# ---------------------------------------------------------------------------


def _g6_encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise SizeCapError(f"graph6 encoding supports n <= 258047, got {n}")


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (bit-exact, no trailing newline)."""
    n = g.n
    header = _g6_encode_n(n)
    bits = []
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            bits.append((col >> u) & 1)
    chars = []
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return header + "".join(chars)


def from_graph6(s: str) -> Graph:
    """Decode a graph6 string; raises ParseError with a byte offset."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    pos = 0
    code = ord(s[0])
    if code == 126:  # '~': long form
        if len(s) >= 2 and ord(s[1]) == 126:
            raise ParseError("graph6 8-byte order not supported", offset=0)
        if len(s) < 4:
            raise ParseError("truncated graph6 long-form header", offset=len(s))
        n = 0
        for i in range(1, 4):
            c = ord(s[i]) - 63
            if not 0 <= c <= 63:
                raise ParseError(f"invalid graph6 byte {s[i]!r}", offset=i)
            n = (n << 6) | c
        pos = 4
    else:
        n = code - 63
        if not 0 <= n <= 62:
            raise ParseError(f"invalid graph6 header byte {s[0]!r}", offset=0)
        pos = 1
    nbits = n * (n - 1) // 2
    body = s[pos:]
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ParseError(
            f"graph6 body for n={n} needs {expect} bytes, got {len(body)}",
            offset=pos + min(len(body), expect),
        )
    bits = []
    for i, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset=pos + i)
        bits.extend((c >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 body", offset=pos + len(body) - 1)
    rows = [0] * n
    t = 0
    for v in range(1, n):
        for u in range(v):
            if bits[t]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            t += 1
    return Graph.from_adj(tuple(rows))


def write_graph6_file(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Complete isomorphism invariant: packed canonical upper triangle.

    ``aut_size`` (the automorphism group order) is an optional
    diagnostic, filled only when requested.
    """

    n: int
    bytes: bytes
    aut_size: int | None = None

    def __eq__(self, other):
        return (
            isinstance(other, CanonicalForm)
            and self.n == other.n
            and self.bytes == other.bytes
        )

    def __hash__(self):
        return hash((self.n, self.bytes))


def _check_bitset_cap(n: int):
    if n > BITSET_CAP:
        raise SizeCapError(f"combinatorial path caps n at {BITSET_CAP}, got {n}")


def canonical_form(g: Graph, with_aut: bool = False) -> CanonicalForm:
    """Canonical form of ``g``; equal exactly for isomorphic graphs."""
    _check_bitset_cap(g.n)
    form = _kernels.canonical_bytes(g.n, g.adj)
    aut = automorphism_count(g) if with_aut else None
    return CanonicalForm(g.n, form, aut)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    _check_bitset_cap(g.n)
    _, order = _kernels.canonical_labeling(g.n, g.adj)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def _extend_automorphism(n, adj, degs, prefix_images) -> bool:
    """Does some automorphism send vertex t to prefix_images[t] for all t?

    Completes the forced partial map by backtracking, preserving both
    adjacency and non-adjacency (graph-to-itself isomorphism).  The
    caller guarantees the forced pairs are consistent among themselves.
    """
    full = (1 << n) - 1
    images = list(prefix_images) + [0] * (n - len(prefix_images))
    used0 = 0
    for w in prefix_images:
        used0 |= 1 << w

    def rec(u, used):
        if u == n:
            return True
        cand = full & ~used
        au = adj[u]
        for t in range(u):
            if (au >> t) & 1:
                cand &= adj[images[t]]
            else:
                cand &= ~adj[images[t]]
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if degs[w] != degs[u]:
                continue
            images[u] = w
            if rec(u + 1, used | (1 << w)):
                return True
        return False

    return rec(len(prefix_images), used0)


def automorphism_count(g: Graph) -> int:
    """Order of the automorphism group via an orbit-stabilizer chain.

    For each vertex v in order, counts the images w reachable by an
    automorphism fixing 0..v-1 pointwise; the product over v is |Aut|.
    """
    _check_bitset_cap(g.n)
    n, adj = g.n, g.adj
    degs = g.degrees()
    total = 1
    for v in range(n):
        low = (1 << v) - 1
        orbit = 1  # v itself
        for w in range(v + 1, n):
            if degs[w] != degs[v] or (adj[v] & low) != (adj[w] & low):
                continue
            if _extend_automorphism(n, adj, degs, list(range(v)) + [w]):
                orbit += 1
        total *= orbit
    return total
