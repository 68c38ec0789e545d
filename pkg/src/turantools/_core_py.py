"""Pure-Python bitset kernels (fallback twin of the compiled extension).

All functions work on "raw" graphs: a vertex count ``n`` plus a tuple
``adj`` of ``n`` integers, where bit ``v`` of ``adj[u]`` is set iff
``uv`` is an edge.  The enumeration path caps ``n`` at 64 so each row
fits one machine word in the compiled twin.

The compiled module ``turantools._core`` implements the same functions
with identical semantics; ``turantools._kernels`` picks one at import
time.  Keep the two in lockstep: the test suite asserts byte-for-byte
parity of their outputs.
"""

from __future__ import annotations

BACKEND = "python"

_FULL = (1 << 64) - 1


def _popcount(x: int) -> int:
    return x.bit_count()


# ---------------------------------------------------------------------------
# canonical labeling: individualization/refinement with automorphism pruning
# ---------------------------------------------------------------------------


def _pack_upper_triangle(n, adj, order):
    """Pack the upper triangle of the reordered adjacency matrix.

    Bits run column-major (pairs (0,1), (0,2), (1,2), (0,3), ...), MSB
    first inside each byte; trailing bits of the last byte are zero.
    This is the same bit sequence graph6 uses, just in 8-bit groups.
    """
    out = bytearray((n * (n - 1) // 2 + 7) // 8)
    t = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            if (aj >> order[i]) & 1:
                out[t >> 3] |= 0x80 >> (t & 7)
            t += 1
    return bytes(out)


def _refine(n, adj, cells):
    """Coarsest equitable refinement of an ordered partition.

    Repeatedly splits cells by neighbor counts into one splitter cell,
    ordering subcells by ascending count.  Restarts the scan after any
    split; the result (cells and their order) depends only on the
    isomorphism type plus the incoming cell order, never on vertex ids.
    """
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault(_popcount(adj[v] & smask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    for k in sorted(groups):
                        out.append(groups[k])
            if changed:
                cells = out
                break
    return cells


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


class _CanonSearch:
    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        self.best = None
        self.best_order = None
        self.first = None
        self.first_order = None
        self.gens = []  # discovered automorphisms, vertex -> vertex tuples

    def run(self):
        n, adj = self.n, self.adj
        by_degree = {}
        for v in range(n):
            by_degree.setdefault(_popcount(adj[v]), []).append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._search(_refine(n, adj, cells), [])
        return self.best, tuple(self.best_order)

    def _record_leaf(self, order):
        bts = _pack_upper_triangle(self.n, self.adj, order)
        if self.best is None or bts < self.best:
            self.best = bts
            self.best_order = order
        elif bts == self.best and order != self.best_order:
            self._add_gen(self.best_order, order)
        if self.first is None:
            self.first = bts
            self.first_order = order
        elif bts == self.first and order != self.first_order:
            self._add_gen(self.first_order, order)

    def _add_gen(self, order_a, order_b):
        # equal packed triangles mean order_a[i] -> order_b[i] preserves edges
        perm = [0] * self.n
        for i in range(self.n):
            perm[order_a[i]] = order_b[i]
        perm = tuple(perm)
        if perm not in self.gens:
            self.gens.append(perm)

    def _search(self, cells, prefix):
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target < 0:
            self._record_leaf([cell[0] for cell in cells])
            return
        uf = _UnionFind(self.n)
        applied = 0

        def absorb_gens():
            nonlocal applied
            while applied < len(self.gens):
                g = self.gens[applied]
                applied += 1
                if all(g[p] == p for p in prefix):
                    for v in range(self.n):
                        uf.union(v, g[v])

        absorb_gens()
        tried = []
        cell = sorted(cells[target])
        for v in cell:
            absorb_gens()
            if any(uf.find(v) == uf.find(u) for u in tried):
                continue
            tried.append(v)
            child = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1 :]
            )
            prefix.append(v)
            self._search(_refine(self.n, self.adj, child), prefix)
            prefix.pop()


def canonical_labeling(n, adj):
    """Canonical form of a raw graph.

    Returns ``(form, order)`` where ``form`` is the lexicographically
    smallest packed upper triangle over all labelings compatible with
    iterated refinement (a complete isomorphism invariant) and
    ``order[i]`` is the original vertex placed at canonical position
    ``i`` by one labeling attaining it.
    """
    if n == 0:
        return b"", ()
    if n == 1:
        return b"", (0,)
    return _CanonSearch(n, adj).run()


def canonical_bytes(n, adj):
    return canonical_labeling(n, adj)[0]


# ---------------------------------------------------------------------------
# subgraph containment (subgraph, not induced)
# ---------------------------------------------------------------------------


def _pattern_order(fn, fadj, start=None):
    """Order pattern vertices so each has many already-placed neighbors."""
    degs = [_popcount(fadj[v]) for v in range(fn)]
    order = []
    placed = 0
    if start is not None:
        order.append(start)
        placed = 1 << start
    while len(order) < fn:
        best, best_key = -1, None
        for v in range(fn):
            if (placed >> v) & 1:
                continue
            key = (_popcount(fadj[v] & placed), degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    back = []
    for i, v in enumerate(order):
        back.append([j for j in range(i) if (fadj[v] >> order[j]) & 1])
    return order, back, degs


def _embed(gn, gadj, fn, fadj, order, back, fdegs, first_candidates):
    gdegs = [_popcount(gadj[v]) for v in range(gn)]
    full = (1 << gn) - 1
    assigned = [0] * fn
    stack = [(0, first_candidates)]
    while stack:
        pos, cand = stack[-1]
        if cand == 0:
            stack.pop()
            continue
        v = (cand & -cand).bit_length() - 1
        stack[-1] = (pos, cand & (cand - 1))
        if gdegs[v] < fdegs[order[pos]]:
            continue
        assigned[pos] = v
        if pos + 1 == fn:
            return True
        nxt = full
        for j in back[pos + 1]:
            nxt &= gadj[assigned[j]]
        for j in range(pos + 1):
            nxt &= ~(1 << assigned[j])
        stack.append((pos + 1, nxt & full))
    return False


def contains_subgraph(gn, gadj, fn, fadj):
    """True iff some injection maps every pattern edge onto a host edge."""
    if fn > gn:
        return False
    order, back, fdegs = _pattern_order(fn, fadj)
    if fn == 0:
        return True
    return _embed(gn, gadj, fn, fadj, order, back, fdegs, (1 << gn) - 1)


def contains_subgraph_anchored(gn, gadj, fn, fadj, anchor):
    """Like contains_subgraph but the image must include ``anchor``.

    Sound only for that restriction; used by the enumerator, where the
    parent is already pattern-free so any new copy must use the newly
    added vertex.
    """
    if fn == 0 or fn > gn:
        return False
    for f in range(fn):
        order, back, fdegs = _pattern_order(fn, fadj, start=f)
        if _embed(gn, gadj, fn, fadj, order, back, fdegs, 1 << anchor):
            return True
    return False


# ---------------------------------------------------------------------------
# canonical augmentation step
# ---------------------------------------------------------------------------


def augment_children(n, adj, parent_canon, fn, fadj):
    """One level of canonical augmentation.

    Extends the ``n``-vertex parent by a new vertex joined to every
    subset of the old vertices and keeps a child iff (a) it stays free
    of the forbidden pattern (when one is given), (b) it is not
    isomorphic to an already kept sibling, and (c) deleting the child's
    canonically-last vertex gives back the parent's class, so each
    isomorphism class is produced from exactly one parent.

    Returns ``[(child_adj, child_canon), ...]`` in subset order.
    """
    if n >= 64:
        raise ValueError("augmentation kernel caps graphs at 64 vertices")
    out = []
    seen = set()
    newbit = 1 << n
    base = list(adj) + [0]
    for mask in range(1 << n):
        child = base.copy()
        child[n] = mask
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            child[v] |= newbit
            m &= m - 1
        child = tuple(child)
        if fn and contains_subgraph_anchored(n + 1, child, fn, fadj, n):
            continue
        form, order = canonical_labeling(n + 1, child)
        if form in seen:
            continue
        seen.add(form)
        last = order[n]
        if last == n:
            accepted = True
        else:
            deleted = _delete_vertex(n + 1, child, last)
            accepted = canonical_bytes(n, deleted) == parent_canon
        if accepted:
            out.append((child, form))
    return out


def _delete_vertex(n, adj, u):
    low = (1 << u) - 1
    rows = []
    for v in range(n):
        if v == u:
            continue
        row = adj[v]
        rows.append((row & low) | ((row >> (u + 1)) << u))
    return tuple(rows)
