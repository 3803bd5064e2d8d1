"""Pure-Python implementations of the integer kernels.

Signatures match the compiled ``_ckernels`` module one for one. These
versions work on arbitrary-precision ints, so they also serve as the
overflow fallback for the compiled path.
"""


def det(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - mik * rk[j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def box_points(A, b, lo, hi, limit=0):
    """Integer points x with lo <= x <= hi and A x >= b, lexicographic order.

    The last coordinate is never scanned: its admissible interval is solved
    directly from the rows. ``limit`` > 0 stops after that many points.
    """
    n = len(lo)
    m = len(A)
    out = []
    if n == 0:
        if all(bi <= 0 for bi in b):
            out.append(())
        return out
    last = [row[n - 1] for row in A]
    partial = [0] * m
    x = [0] * n

    def rec(k):
        if k == n - 1:
            low, high = lo[k], hi[k]
            for r in range(m):
                a = last[r]
                c = b[r] - partial[r]
                if a > 0:
                    q = -((-c) // a)
                    if q > low:
                        low = q
                elif a < 0:
                    q = c // a
                    if q < high:
                        high = q
                elif c > 0:
                    return False
                if low > high:
                    return False
            for v in range(low, high + 1):
                x[k] = v
                out.append(tuple(x))
                if limit and len(out) >= limit:
                    return True
            return False
        col = [row[k] for row in A]
        for v in range(lo[k], hi[k] + 1):
            x[k] = v
            for r in range(m):
                partial[r] += col[r] * v
            stop = rec(k + 1)
            for r in range(m):
                partial[r] -= col[r] * v
            if stop:
                return True
        return False

    rec(0)
    return out


def tight_sets(A, b, points):
    """For each point, the tuple of row indices r with A[r] . p == b[r]."""
    out = []
    for p in points:
        hit = []
        for r, row in enumerate(A):
            if sum(a * x for a, x in zip(row, p)) == b[r]:
                hit.append(r)
        out.append(tuple(hit))
    return out
