# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see _kernels_py for conventions."""

from collections import deque

BACKEND = "cython"

cdef enum:
    MAXN = 64


cdef inline int _load(object w, int* out) except -1:
    cdef Py_ssize_t n = len(w), i
    if n > MAXN:
        raise ValueError("signed permutation too long")
    for i in range(n):
        out[i] = w[i]
    return <int>n


cdef tuple _pack(int* a, int n):
    return tuple([a[i] for i in range(n)])


def compose(u, v):
    cdef int cu[MAXN]
    cdef int cv[MAXN]
    cdef int out[MAXN]
    cdef int n = _load(u, cu)
    _load(v, cv)
    cdef int i, a
    for i in range(n):
        a = cv[i]
        out[i] = cu[a - 1] if a > 0 else -cu[-a - 1]
    return _pack(out, n)


def act(w, vec):
    cdef int cw[MAXN]
    cdef int n = _load(w, cw)
    out = [0] * n
    cdef int i, a
    for i in range(n):
        a = cw[i]
        if a > 0:
            out[a - 1] += vec[i]
        else:
            out[-a - 1] -= vec[i]
    return tuple(out)


cdef object _mask(int* w, const long long[:] ri, const long long[:] rc,
                  const long long[:] rj, const long long[:] rd):
    cdef Py_ssize_t k, npos = ri.shape[0]
    cdef int a, b, p, q
    cdef long long c, d
    cdef unsigned long long small = 0
    big = 0
    for k in range(npos):
        a = w[ri[k]]
        if a > 0:
            p = a - 1
            c = rc[k]
        else:
            p = -a - 1
            c = -rc[k]
        if rj[k] >= 0:
            b = w[rj[k]]
            if b > 0:
                q = b - 1
                d = rd[k]
            else:
                q = -b - 1
                d = -rd[k]
            if q < p:
                c = d
        if c < 0:
            if k < 63:
                small |= (<unsigned long long>1) << k
            else:
                big |= 1 << k
    return big | small


def inversion_mask(w, ri, rc, rj, rd):
    cdef int cw[MAXN]
    _load(w, cw)
    return _mask(cw, ri, rc, rj, rd)


def inversion_masks(ws, ri, rc, rj, rd):
    cdef int cw[MAXN]
    cdef const long long[:] vi = ri
    cdef const long long[:] vc = rc
    cdef const long long[:] vj = rj
    cdef const long long[:] vd = rd
    out = []
    for w in ws:
        _load(w, cw)
        out.append(_mask(cw, vi, vc, vj, vd))
    return out


def enumerate_actions(gens, Py_ssize_t limit):
    cdef int ngen = len(gens)
    cdef int n = len(gens[0])
    cdef int g, i, a
    cdef int cg[16][MAXN]
    cdef int cw[MAXN]
    cdef int out[MAXN]
    if ngen > 16:
        raise ValueError("too many generators")
    for g in range(ngen):
        _load(gens[g], cg[g])
    start = tuple(range(1, n + 1))
    seen = {start}
    order = [start]
    queue = deque(order)
    while queue:
        w = queue.popleft()
        _load(w, cw)
        for g in range(ngen):
            for i in range(n):
                a = cg[g][i]
                out[i] = cw[a - 1] if a > 0 else -cw[-a - 1]
            x = _pack(out, n)
            if x not in seen:
                seen.add(x)
                order.append(x)
                if len(order) > limit:
                    raise OverflowError(f"group exceeds {limit} elements")
                queue.append(x)
    return order


def bareiss_rank(rows):
    cdef list m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    cdef Py_ssize_t nrows = len(m), ncols = len(m[0])
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef list row_i, row_r
    prev = 1
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        row_r = m[rank]
        p = row_r[col]
        for i in range(rank + 1, nrows):
            row_i = m[i]
            f = row_i[col]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
