# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same interface as f2hopf._kernels."""

from libc.stdlib cimport free, malloc

BACKEND = "cython"

ctypedef unsigned long long u64


cdef inline int popcount_parity(u64 x) noexcept nogil:
    x ^= x >> 32
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return <int> (x & 1)


cdef struct EqData:
    int n_eq
    char *const_
    u64 *lin
    int *pair_start
    int *pair_i
    int *pair_j


cdef int _descend(int level, int nvars, u64 assign,
                  int *level_start, int *eq_order,
                  EqData *eq, list solutions, long long limit) except -1:
    cdef int b, k, e, p, ok
    cdef u64 a
    cdef int v
    if level == nvars:
        solutions.append(assign)
        return 0
    for b in range(2):
        a = assign | ((<u64> b) << level)
        ok = 1
        for k in range(level_start[level], level_start[level + 1]):
            e = eq_order[k]
            v = eq.const_[e] ^ popcount_parity(a & eq.lin[e])
            for p in range(eq.pair_start[e], eq.pair_start[e + 1]):
                v ^= <int> ((a >> eq.pair_i[p]) & (a >> eq.pair_j[p]) & 1)
            if v:
                ok = 0
                break
        if ok:
            _descend(level + 1, nvars, a, level_start, eq_order, eq,
                     solutions, limit)
            if limit >= 0 and len(solutions) >= limit:
                return 0
    return 0


def solve_quadratic(int nvars, equations, limit=None):
    """Enumerate solutions of a quadratic XOR system; see f2hopf._kernels."""
    if nvars > 63:
        raise ValueError("kernel supports at most 63 variables")
    eqs = []
    cdef int last, i, j
    cdef object const, lin, pairs
    for const, lin, pairs in equations:
        last = -1
        if lin:
            last = int(lin).bit_length() - 1
        for i, j in pairs:
            if j > last:
                last = j
        if last < 0:
            if const:
                return []
            continue
        eqs.append((last, const, lin, pairs))

    cdef int n_eq = len(eqs)
    cdef int total_pairs = 0
    for _, _, _, pairs in eqs:
        total_pairs += len(pairs)

    cdef EqData eq
    eq.n_eq = n_eq
    eq.const_ = <char *> malloc(max(n_eq, 1) * sizeof(char))
    eq.lin = <u64 *> malloc(max(n_eq, 1) * sizeof(u64))
    eq.pair_start = <int *> malloc((n_eq + 1) * sizeof(int))
    eq.pair_i = <int *> malloc(max(total_pairs, 1) * sizeof(int))
    eq.pair_j = <int *> malloc(max(total_pairs, 1) * sizeof(int))
    cdef int *level_start = <int *> malloc((nvars + 2) * sizeof(int))
    cdef int *eq_order = <int *> malloc(max(n_eq, 1) * sizeof(int))
    if (eq.const_ == NULL or eq.lin == NULL or eq.pair_start == NULL or
            eq.pair_i == NULL or eq.pair_j == NULL or level_start == NULL or
            eq_order == NULL):
        raise MemoryError()

    solutions: list = []
    cdef int e = 0, pos = 0, lv, k
    cdef long long limit_c = -1 if limit is None else int(limit)
    try:
        eq.pair_start[0] = 0
        for last, const, lin, pairs in eqs:
            eq.const_[e] = <char> const
            eq.lin[e] = <u64> lin
            for i, j in pairs:
                eq.pair_i[pos] = i
                eq.pair_j[pos] = j
                pos += 1
            eq.pair_start[e + 1] = pos
            e += 1
        # Bucket equations by the level at which they become decidable.
        counts = [0] * nvars
        for last, _, _, _ in eqs:
            counts[last] += 1
        level_start[0] = 0
        for lv in range(nvars):
            level_start[lv + 1] = level_start[lv] + counts[lv]
        fill = list(range(nvars))
        for lv in range(nvars):
            fill[lv] = level_start[lv]
        e = 0
        for last, _, _, _ in eqs:
            eq_order[fill[last]] = e
            fill[last] += 1
            e += 1
        _descend(0, nvars, 0, level_start, eq_order, &eq, solutions, limit_c)
    finally:
        free(eq.const_)
        free(eq.lin)
        free(eq.pair_start)
        free(eq.pair_i)
        free(eq.pair_j)
        free(level_start)
        free(eq_order)
    if limit is not None:
        solutions = solutions[: int(limit)]
    solutions.sort()
    return solutions


def transform_product(v, int n, p, pinv):
    """Basis change of a packed product tensor; see f2hopf._kernels."""
    cdef u64 vv = <u64> v
    cdef u64 mask = (<u64> 1 << n) - 1
    cdef u64 out = 0, acc, res
    cdef u64 prow[8]
    cdef u64 pinvrow[8]
    cdef int a, b, m, u, r
    for a in range(n):
        prow[a] = <u64> p[a]
        pinvrow[a] = <u64> pinv[a]
    for a in range(n):
        for b in range(n):
            acc = 0
            for m in range(n):
                if (prow[a] >> m) & 1:
                    for u in range(n):
                        if (prow[b] >> u) & 1:
                            acc ^= (vv >> ((m * n + u) * n)) & mask
            res = 0
            for r in range(n):
                if (acc >> r) & 1:
                    res ^= pinvrow[r]
            out |= res << ((a * n + b) * n)
    return out


def transform_coproduct(c, int n, p, pinv):
    """Basis change of a packed coproduct tensor; see f2hopf._kernels."""
    cdef u64 cc = <u64> c
    cdef int nn = n * n
    cdef u64 mask2 = (<u64> 1 << nn) - 1
    cdef u64 out = 0, acc, res
    cdef u64 prow[8]
    cdef u64 pinvrow[8]
    cdef int a, m, t, u, r, bcol, gcol
    for a in range(n):
        prow[a] = <u64> p[a]
        pinvrow[a] = <u64> pinv[a]
    for a in range(n):
        acc = 0
        for m in range(n):
            if (prow[a] >> m) & 1:
                acc ^= (cc >> (m * nn)) & mask2
        res = 0
        for t in range(nn):
            if (acc >> t) & 1:
                u = t / n
                r = t % n
                for bcol in range(n):
                    if (pinvrow[u] >> bcol) & 1:
                        for gcol in range(n):
                            if (pinvrow[r] >> gcol) & 1:
                                res ^= (<u64> 1) << (bcol * n + gcol)
        out |= res << (a * nn)
    return out
