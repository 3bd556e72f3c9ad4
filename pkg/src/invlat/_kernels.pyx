# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementations of the hot kernels.

Behavioural twin of ``invlat._kernels_py``; the permanent runs fully in C
integers (safe for n <= 12), the deletion-contraction recursion keeps its
bitmask bookkeeping in C and its coefficients in Python integers.
"""

IMPLEMENTATION = "cython"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int invlat_popcountll(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int invlat_bitlen(unsigned long long x) {
        return x ? 64 - __builtin_clzll(x) : 0;
    }
    #else
    static inline int invlat_popcountll(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    static inline int invlat_bitlen(unsigned long long x) {
        int c = 0;
        while (x) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int invlat_popcountll(unsigned long long x) nogil
    int invlat_bitlen(unsigned long long x) nogil

cdef unsigned long long ONE = 1


def ryser_permanent(rows, int n):
    """Permanent of an n x n 0/1 matrix given as row bitmasks.

    Ryser's inclusion-exclusion over column subsets, walked in Gray-code
    order so each step updates one column:

        per(A) = (-1)^n * sum_{S != 0} (-1)^|S| prod_i |row_i & S|
    """
    cdef unsigned long long row_arr[16]
    cdef long long sums[16]
    cdef long long total = 0
    cdef long long prod
    cdef unsigned long long g, gray, prev_gray, changed, bit
    cdef int i, col, size
    if n > 16:
        raise ValueError("n too large for the compiled permanent")
    if len(rows) != n:
        raise ValueError("need exactly n rows")
    if n == 0:
        return 1
    for i in range(n):
        row_arr[i] = <unsigned long long> rows[i]
        sums[i] = 0
    size = 0
    prev_gray = 0
    for g in range(1, ONE << n):
        gray = g ^ (g >> 1)
        changed = gray ^ prev_gray
        prev_gray = gray
        col = invlat_bitlen(changed) - 1
        bit = ONE << col
        if gray & bit:
            size += 1
            for i in range(n):
                if row_arr[i] & bit:
                    sums[i] += 1
        else:
            size -= 1
            for i in range(n):
                if row_arr[i] & bit:
                    sums[i] -= 1
        prod = 1
        for i in range(n):
            if sums[i] == 0:
                prod = 0
                break
            prod *= sums[i]
        if prod != 0:
            if size & 1:
                total -= prod
            else:
                total += prod
    if n % 2 == 0:
        return total
    return -total


def chromatic_coeffs(masks):
    """Chromatic polynomial of a simple graph, ascending coefficients.

    The graph is given by 0-based neighbor bitmasks.  Deletion-contraction
    with a memo on the labelled graph, after peeling isolated and degree-1
    vertices, splitting connected components, and short-circuiting
    edgeless and complete graphs.
    """
    memo = {}
    return tuple(_chi(tuple(masks), memo))


cdef list _chi(tuple masks, dict memo):
    cdef int v = len(masks)
    cdef int i, k, idx, deg, nb, u, wv, best, d, j
    cdef unsigned long long m, b, low, full, nbs
    if v == 0:
        return [1]
    cached = memo.get(masks)
    if cached is not None:
        return <list> cached

    # Peel vertices of degree 0 (factor t) and degree 1 (factor t-1).
    cdef int t_factors = 0
    cdef int t1_factors = 0
    cdef list work = list(masks)
    cdef bint changed_any = True
    while changed_any:
        changed_any = False
        for idx in range(len(work) - 1, -1, -1):
            m = <unsigned long long> work[idx]
            deg = invlat_popcountll(m)
            if deg <= 1:
                if deg == 0:
                    t_factors += 1
                else:
                    t1_factors += 1
                    nb = invlat_bitlen(m) - 1
                    work[nb] = (<unsigned long long> work[nb]) & ~(ONE << idx)
                del work[idx]
                low = (ONE << idx) - 1
                for k in range(len(work)):
                    m = <unsigned long long> work[k]
                    work[k] = (m & low) | ((m >> 1) & ~low)
                changed_any = True

    cdef list res, core, deleted
    if t_factors or t1_factors:
        core = _chi(tuple(work), memo)
        res = core
        for i in range(t1_factors):
            res = _sub(_shift(res), res)
        res = [0] * t_factors + res
        memo[masks] = res
        return res

    k = len(work)
    if k == 0:
        res = [1]
        memo[masks] = res
        return res

    cdef list comps = _components(work)
    if len(comps) > 1:
        res = [1]
        for comp in comps:
            res = _mul(res, _chi(_induced(work, comp), memo))
        memo[masks] = res
        return res

    full = (ONE << k) - 1
    cdef bint complete = True
    for i in range(k):
        if (<unsigned long long> work[i]) != (full ^ (ONE << i)):
            complete = False
            break
    if complete:
        res = [1]
        for i in range(k):
            res = _sub(_shift(res), [c * i for c in res])
        memo[masks] = res
        return res

    # Delete/contract an edge at a max-degree vertex.
    u = 0
    best = -1
    for i in range(k):
        d = invlat_popcountll(<unsigned long long> work[i])
        if d > best:
            best = d
            u = i
    nbs = <unsigned long long> work[u]
    best = -1
    wv = -1
    while nbs:
        b = nbs & (~nbs + 1)
        nbs ^= b
        j = invlat_bitlen(b) - 1
        d = invlat_popcountll(<unsigned long long> work[j])
        if d > best:
            best = d
            wv = j
    deleted = list(work)
    deleted[u] = (<unsigned long long> deleted[u]) & ~(ONE << wv)
    deleted[wv] = (<unsigned long long> deleted[wv]) & ~(ONE << u)
    res = _sub(
        _chi(tuple(deleted), memo),
        _chi(_contract(work, min(u, wv), max(u, wv)), memo),
    )
    memo[masks] = res
    return res


cdef tuple _contract(list masks, int a, int b):
    """Merge vertex b into a (a < b), drop b, compact bit positions."""
    cdef int i
    cdef unsigned long long m, low
    cdef unsigned long long merged = ((<unsigned long long> masks[a]) | (<unsigned long long> masks[b])) \
        & ~((ONE << a) | (ONE << b))
    cdef list out = []
    low = (ONE << b) - 1
    for i in range(len(masks)):
        if i == b:
            continue
        m = merged if i == a else <unsigned long long> masks[i]
        if i != a and (m >> b) & 1:
            m = (m & ~(ONE << b)) | (ONE << a)
        out.append((m & low) | ((m >> 1) & ~low))
    return tuple(out)


cdef list _components(list masks):
    cdef int v = len(masks)
    cdef int s
    cdef unsigned long long seen = 0, frontier, comp, nxt, m, b
    cdef list comps = []
    for s in range(v):
        if (seen >> s) & 1:
            continue
        frontier = ONE << s
        comp = frontier
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & (~m + 1)
                m ^= b
                nxt |= <unsigned long long> masks[invlat_bitlen(b) - 1]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


cdef tuple _induced(list masks, object comp_obj):
    cdef unsigned long long comp = <unsigned long long> comp_obj
    cdef unsigned long long m, b, nm, mm
    cdef int new_idx, old
    cdef list keep = []
    m = comp
    while m:
        b = m & (~m + 1)
        m ^= b
        keep.append(invlat_bitlen(b) - 1)
    cdef dict pos = {}
    for new_idx in range(len(keep)):
        pos[keep[new_idx]] = new_idx
    cdef list out = []
    for old in keep:
        nm = 0
        mm = (<unsigned long long> masks[old]) & comp
        while mm:
            b = mm & (~mm + 1)
            mm ^= b
            nm |= ONE << (<int> pos[invlat_bitlen(b) - 1])
        out.append(nm)
    return tuple(out)


cdef list _shift(list p):
    return [0] + p


cdef list _sub(list p, list q):
    cdef int i
    if len(p) < len(q):
        p = p + [0] * (len(q) - len(p))
    cdef list out = list(p)
    for i in range(len(q)):
        out[i] = out[i] - q[i]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


cdef list _mul(list p, list q):
    cdef int i, j
    if not p or not q:
        return []
    cdef list out = [0] * (len(p) + len(q) - 1)
    for i in range(len(p)):
        a = p[i]
        if a:
            for j in range(len(q)):
                out[i + j] = out[i + j] + a * q[j]
    return out
