"""Pure-Python versions of the hot kernels.

Signed permutations are tuples ``w`` of nonzero ints: ``w[i] = s*(j+1)``
means w(e_i) = s*e_j.  Positive roots are described by four parallel
integer arrays (first coordinate, its coefficient, second coordinate or -1,
its coefficient); every classical root has at most two nonzero coordinates.
"""

from collections import deque

BACKEND = "python"


def compose(u, v):
    """The signed permutation u*v (apply v first)."""
    return tuple(u[a - 1] if a > 0 else -u[-a - 1] for a in v)


def act(w, vec):
    out = [0] * len(w)
    for i, a in enumerate(w):
        if a > 0:
            out[a - 1] += vec[i]
        else:
            out[-a - 1] -= vec[i]
    return tuple(out)


def inversion_mask(w, ri, rc, rj, rd):
    """Bitmask of positive roots k with w(root_k) negative.

    A classical root is positive iff its first nonzero coordinate is.
    """
    mask = 0
    for k in range(len(ri)):
        a = w[ri[k]]
        if a > 0:
            p, c = a - 1, rc[k]
        else:
            p, c = -a - 1, -rc[k]
        j = rj[k]
        if j >= 0:
            b = w[j]
            if b > 0:
                q, d = b - 1, rd[k]
            else:
                q, d = -b - 1, -rd[k]
            if q < p:
                c = d
        if c < 0:
            mask |= 1 << k
    return mask


def inversion_masks(ws, ri, rc, rj, rd):
    return [inversion_mask(w, ri, rc, rj, rd) for w in ws]


def enumerate_actions(gens, limit):
    """Breadth-first closure of the identity under right multiplication by gens."""
    n = len(gens[0])
    start = tuple(range(1, n + 1))
    seen = {start}
    order = [start]
    queue = deque(order)
    while queue:
        w = queue.popleft()
        for s in gens:
            x = compose(w, s)
            if x not in seen:
                seen.add(x)
                order.append(x)
                if len(order) > limit:
                    raise OverflowError(f"group exceeds {limit} elements")
                queue.append(x)
    return order


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
