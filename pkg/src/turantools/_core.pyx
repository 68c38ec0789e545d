# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels: canonical labeling, subgraph containment,
and the canonical-augmentation step.

Mirror of turantools._core_py (same functions, same semantics, same
deterministic choices); the test suite asserts byte parity between the
two.  Graphs are (n, adj) with one 64-bit word per vertex.
"""

from libc.string cimport memcmp, memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

DEF MAXN = 64
DEF MAXBYTES = 252   # 64*63/2 bits packed
DEF MAXGENS = 128


cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int lowbit(u64 x) nogil:
    return __builtin_ctzll(x)


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef struct CanonState:
    int n
    int nbytes
    u64 adj[MAXN]
    unsigned char best[MAXBYTES]
    int best_order[MAXN]
    int have_best
    unsigned char first[MAXBYTES]
    int first_order[MAXN]
    int have_first
    int gens[MAXGENS][MAXN]
    int ngens
    int prefix[MAXN]
    int depth


cdef void pack_triangle(int n, u64* adj, int* order, unsigned char* out, int nbytes) nogil:
    cdef int i, j, t = 0
    cdef u64 aj
    memset(out, 0, nbytes)
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            if (aj >> order[i]) & 1ULL:
                out[t >> 3] |= <unsigned char> (0x80 >> (t & 7))
            t += 1


cdef void refine(CanonState* st, int* lab, char* ptn) nogil:
    """Coarsest equitable refinement; identical split sequencing to the
    Python twin: one splitter splits every cell, then restart."""
    cdef int n = st.n
    cdef int changed = 1
    cdef int s_start, s_end, a, b, k, c, v, nvals, t, pos
    cdef u64 smask
    cdef int cnt[MAXN]
    cdef int vals[MAXN]
    cdef int tmp[MAXN]
    cdef char newptn[MAXN]
    cdef int any_split
    while changed:
        changed = 0
        s_start = 0
        while s_start < n:
            s_end = s_start
            while ptn[s_end]:
                s_end += 1
            smask = 0
            for k in range(s_start, s_end + 1):
                smask |= (<u64> 1) << lab[k]
            # split every cell by this splitter
            any_split = 0
            a = 0
            while a < n:
                b = a
                while ptn[b]:
                    b += 1
                if b > a:
                    for k in range(a, b + 1):
                        cnt[k] = popcount(st.adj[lab[k]] & smask)
                    # collect distinct counts ascending
                    nvals = 0
                    for k in range(a, b + 1):
                        for t in range(nvals):
                            if vals[t] == cnt[k]:
                                break
                        else:
                            vals[nvals] = cnt[k]
                            nvals += 1
                    if nvals > 1:
                        any_split = 1
                        # ascending insertion sort of the distinct counts
                        for t in range(1, nvals):
                            c = vals[t]
                            k = t - 1
                            while k >= 0 and vals[k] > c:
                                vals[k + 1] = vals[k]
                                k -= 1
                            vals[k + 1] = c
                        # stable bucket placement
                        pos = a
                        for t in range(nvals):
                            for k in range(a, b + 1):
                                if cnt[k] == vals[t]:
                                    tmp[pos] = lab[k]
                                    newptn[pos] = 1
                                    pos += 1
                            newptn[pos - 1] = 0  # close the bucket
                        for k in range(a, b + 1):
                            lab[k] = tmp[k]
                            ptn[k] = newptn[k]
                a = b + 1
            if any_split:
                changed = 1
                break
            s_start = s_end + 1


cdef void record_leaf(CanonState* st, int* lab):
    cdef unsigned char buf[MAXBYTES]
    cdef int n = st.n
    cdef int i
    pack_triangle(n, st.adj, lab, buf, st.nbytes)
    if not st.have_best or memcmp(buf, st.best, st.nbytes) < 0:
        memcpy(st.best, buf, st.nbytes)
        memcpy(st.best_order, lab, n * sizeof(int))
        st.have_best = 1
    elif memcmp(buf, st.best, st.nbytes) == 0:
        add_gen(st, st.best_order, lab)
    if not st.have_first:
        memcpy(st.first, buf, st.nbytes)
        memcpy(st.first_order, lab, n * sizeof(int))
        st.have_first = 1
    elif memcmp(buf, st.first, st.nbytes) == 0:
        add_gen(st, st.first_order, lab)


cdef void add_gen(CanonState* st, int* order_a, int* order_b):
    cdef int perm[MAXN]
    cdef int i, g, same
    cdef int n = st.n
    for i in range(n):
        perm[order_a[i]] = order_b[i]
    same = 1
    for i in range(n):
        if perm[i] != i:
            same = 0
            break
    if same or st.ngens >= MAXGENS:
        return
    for g in range(st.ngens):
        same = 1
        for i in range(n):
            if st.gens[g][i] != perm[i]:
                same = 0
                break
        if same:
            return
    memcpy(st.gens[st.ngens], perm, n * sizeof(int))
    st.ngens += 1


cdef int uf_find(int* parent, int v) nogil:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


cdef void search(CanonState* st, int* lab_in, char* ptn_in):
    cdef int n = st.n
    cdef int lab[MAXN]
    cdef char ptn[MAXN]
    cdef int child_lab[MAXN]
    cdef char child_ptn[MAXN]
    cdef int cell[MAXN]
    cdef int parent[MAXN]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int applied = 0
    cdef int i, k, a, b, target, cell_len, v, g, w, ok, rv
    memcpy(lab, lab_in, n * sizeof(int))
    memcpy(ptn, ptn_in, n * sizeof(char))
    refine(st, lab, ptn)
    target = -1
    a = 0
    while a < n:
        b = a
        while ptn[b]:
            b += 1
        if b > a:
            target = a
            break
        a = b + 1
    if target < 0:
        record_leaf(st, lab)
        return
    cell_len = b - a + 1
    for i in range(cell_len):
        cell[i] = lab[a + i]
    # ascending vertex order for candidate iteration
    for i in range(1, cell_len):
        v = cell[i]
        k = i - 1
        while k >= 0 and cell[k] > v:
            cell[k + 1] = cell[k]
            k -= 1
        cell[k + 1] = v
    for i in range(n):
        parent[i] = i
    # absorb automorphisms that fix the current prefix pointwise
    while applied < st.ngens:
        ok = 1
        for k in range(st.depth):
            if st.gens[applied][st.prefix[k]] != st.prefix[k]:
                ok = 0
                break
        if ok:
            for v in range(n):
                w = uf_find(parent, v)
                g = uf_find(parent, st.gens[applied][v])
                if w != g:
                    parent[w] = g
        applied += 1
    for i in range(cell_len):
        v = cell[i]
        # pick up generators discovered by earlier siblings
        while applied < st.ngens:
            ok = 1
            for k in range(st.depth):
                if st.gens[applied][st.prefix[k]] != st.prefix[k]:
                    ok = 0
                    break
            if ok:
                for w in range(n):
                    g = uf_find(parent, w)
                    rv = uf_find(parent, st.gens[applied][w])
                    if g != rv:
                        parent[g] = rv
            applied += 1
        ok = 1
        for k in range(ntried):
            if uf_find(parent, v) == uf_find(parent, tried[k]):
                ok = 0
                break
        if not ok:
            continue
        tried[ntried] = v
        ntried += 1
        # individualize v at the front of the target cell
        memcpy(child_lab, lab, n * sizeof(int))
        memcpy(child_ptn, ptn, n * sizeof(char))
        child_lab[a] = v
        k = a + 1
        for g in range(cell_len):
            w = lab[a + g]
            if w != v:
                child_lab[k] = w
                k += 1
        child_ptn[a] = 0
        st.prefix[st.depth] = v
        st.depth += 1
        search(st, child_lab, child_ptn)
        st.depth -= 1


cdef bytes run_canonical(int n, u64* adj, int* order_out):
    cdef CanonState st
    cdef int lab[MAXN]
    cdef char ptn[MAXN]
    cdef int degs[MAXN]
    cdef int i, d, pos
    if n == 0:
        return b""
    if n == 1:
        order_out[0] = 0
        return b""
    st.n = n
    st.nbytes = (n * (n - 1) // 2 + 7) // 8
    for i in range(n):
        st.adj[i] = adj[i]
    st.have_best = 0
    st.have_first = 0
    st.ngens = 0
    st.depth = 0
    for i in range(n):
        degs[i] = popcount(adj[i])
    # initial cells: degree ascending, vertex id ascending inside
    pos = 0
    for d in range(n):
        for i in range(n):
            if degs[i] == d:
                lab[pos] = i
                pos += 1
    for i in range(n - 1):
        ptn[i] = 1 if degs[lab[i]] == degs[lab[i + 1]] else 0
    ptn[n - 1] = 0
    search(&st, lab, ptn)
    for i in range(n):
        order_out[i] = st.best_order[i]
    return bytes(st.best[: st.nbytes])


cdef int load_adj(object adj, u64* out, int n) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("bitset kernels cap graphs at 64 vertices")
    for i in range(n):
        out[i] = <u64> adj[i]
    return 0


def canonical_labeling(int n, adj):
    """Canonical form of a raw graph.

    Returns ``(form, order)`` where ``form`` is the lexicographically
    smallest packed upper triangle over all labelings compatible with
    iterated refinement (a complete isomorphism invariant) and
    ``order[i]`` is the original vertex placed at canonical position
    ``i`` by one labeling attaining it.
    """
    cdef u64 cadj[MAXN]
    cdef int order[MAXN]
    cdef int i
    if n == 0:
        return b"", ()
    load_adj(adj, cadj, n)
    form = run_canonical(n, cadj, order)
    return form, tuple(order[i] for i in range(n))


def canonical_bytes(int n, adj):
    cdef u64 cadj[MAXN]
    cdef int order[MAXN]
    if n == 0:
        return b""
    load_adj(adj, cadj, n)
    return run_canonical(n, cadj, order)


# ---------------------------------------------------------------------------
# subgraph containment
# ---------------------------------------------------------------------------

cdef void pattern_order(int fn, u64* fadj, int start, int* order, u64* backmask, int* fdegs) nogil:
    """Order pattern vertices so each has many already-placed neighbors.
    backmask[i] holds the *positions* (not vertex ids) of earlier
    neighbors of order[i]."""
    cdef u64 placed = 0
    cdef int filled = 0
    cdef int v, best, c, d, i
    cdef int bc, bd
    for v in range(fn):
        fdegs[v] = popcount(fadj[v])
    if start >= 0:
        order[0] = start
        placed = (<u64> 1) << start
        filled = 1
    while filled < fn:
        best = -1
        bc = -1
        bd = -1
        for v in range(fn):
            if (placed >> v) & 1ULL:
                continue
            c = popcount(fadj[v] & placed)
            d = fdegs[v]
            if c > bc or (c == bc and d > bd) or (c == bc and d == bd and v < best):
                best = v
                bc = c
                bd = d
        order[filled] = best
        placed |= (<u64> 1) << best
        filled += 1
    for i in range(fn):
        backmask[i] = 0
        for c in range(i):
            if (fadj[order[i]] >> order[c]) & 1ULL:
                backmask[i] |= (<u64> 1) << c

cdef int embed(int gn, u64* gadj, int fn, int* order, u64* backmask, int* fdegs,
               u64 first_candidates) nogil:
    cdef int gdegs[MAXN]
    cdef u64 cand_stack[MAXN + 1]
    cdef int assigned[MAXN]
    cdef int top, pos, v, j
    cdef u64 cand, nxt, full, bm
    for v in range(gn):
        gdegs[v] = popcount(gadj[v])
    full = ((<u64> 1) << gn) - 1 if gn < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    top = 0
    cand_stack[0] = first_candidates
    while top >= 0:
        cand = cand_stack[top]
        if cand == 0:
            top -= 1
            continue
        v = lowbit(cand)
        cand_stack[top] = cand & (cand - 1)
        if gdegs[v] < fdegs[order[top]]:
            continue
        assigned[top] = v
        if top + 1 == fn:
            return 1
        nxt = full
        bm = backmask[top + 1]
        j = 0
        while bm:
            j = lowbit(bm)
            bm &= bm - 1
            nxt &= gadj[assigned[j]]
        for j in range(top + 1):
            nxt &= ~((<u64> 1) << assigned[j])
        top += 1
        cand_stack[top] = nxt
    return 0


def contains_subgraph(int gn, gadj, int fn, fadj):
    """True iff some injection maps every pattern edge onto a host edge."""
    cdef u64 cg[MAXN]
    cdef u64 cf[MAXN]
    cdef int order[MAXN]
    cdef u64 backmask[MAXN]
    cdef int fdegs[MAXN]
    if fn > gn:
        return False
    if fn == 0:
        return True
    load_adj(gadj, cg, gn)
    load_adj(fadj, cf, fn)
    pattern_order(fn, cf, -1, order, backmask, fdegs)
    return embed(gn, cg, fn, order, backmask, fdegs,
                 (((<u64> 1) << gn) - 1) if gn < 64 else <u64> 0xFFFFFFFFFFFFFFFF) != 0


def contains_subgraph_anchored(int gn, gadj, int fn, fadj, int anchor):
    """Like contains_subgraph but the image must include ``anchor``."""
    cdef u64 cg[MAXN]
    cdef u64 cf[MAXN]
    cdef int order[MAXN]
    cdef u64 backmask[MAXN]
    cdef int fdegs[MAXN]
    cdef int f
    if fn == 0 or fn > gn:
        return False
    load_adj(gadj, cg, gn)
    load_adj(fadj, cf, fn)
    for f in range(fn):
        pattern_order(fn, cf, f, order, backmask, fdegs)
        if embed(gn, cg, fn, order, backmask, fdegs, (<u64> 1) << anchor):
            return True
    return False


cdef int anchored_c(int gn, u64* gadj, int fn, u64* fadj, int anchor) nogil:
    cdef int order[MAXN]
    cdef u64 backmask[MAXN]
    cdef int fdegs[MAXN]
    cdef int f
    for f in range(fn):
        pattern_order(fn, fadj, f, order, backmask, fdegs)
        if embed(gn, gadj, fn, order, backmask, fdegs, (<u64> 1) << anchor):
            return 1
    return 0


# ---------------------------------------------------------------------------
# canonical augmentation step
# ---------------------------------------------------------------------------

cdef void delete_vertex(int n, u64* adj, int u, u64* out) nogil:
    cdef u64 low = ((<u64> 1) << u) - 1
    cdef int v, pos = 0
    cdef u64 row
    for v in range(n):
        if v == u:
            continue
        row = adj[v]
        out[pos] = (row & low) | ((row >> (u + 1)) << u)
        pos += 1


def augment_children(int n, adj, bytes parent_canon, int fn, fadj):
    """One level of canonical augmentation.

    Extends the ``n``-vertex parent by a new vertex joined to every
    subset of the old vertices and keeps a child iff (a) it stays free
    of the forbidden pattern (when one is given), (b) it is not
    isomorphic to an already kept sibling, and (c) deleting the child's
    canonically-last vertex gives back the parent's class, so each
    isomorphism class is produced from exactly one parent.

    Returns ``[(child_adj, child_canon), ...]`` in subset order.
    """
    cdef u64 parent_adj[MAXN]
    cdef u64 child[MAXN]
    cdef u64 deleted[MAXN]
    cdef u64 cf[MAXN]
    cdef int order[MAXN]
    cdef int order2[MAXN]
    cdef u64 mask, m
    cdef int v, last, i
    cdef bytes form, dform
    if n >= MAXN:
        raise ValueError("augmentation kernel caps graphs at 64 vertices")
    load_adj(adj, parent_adj, n)
    if fn:
        load_adj(fadj, cf, fn)
    out = []
    seen = set()
    for mask in range(<u64> 1 << n):
        for v in range(n):
            child[v] = parent_adj[v]
        child[n] = mask
        m = mask
        while m:
            v = lowbit(m)
            m &= m - 1
            child[v] |= (<u64> 1) << n
        if fn and anchored_c(n + 1, child, fn, cf, n):
            continue
        form = run_canonical(n + 1, child, order)
        if form in seen:
            continue
        seen.add(form)
        last = order[n]
        if last == n:
            accepted = True
        else:
            delete_vertex(n + 1, child, last, deleted)
            dform = run_canonical(n, deleted, order2)
            accepted = dform == parent_canon
        if accepted:
            out.append((tuple(child[i] for i in range(n + 1)), form))
    return out
