# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels on 64-bit machine words.

Callers go through :mod:`latpoly.kernels`, which checks magnitudes before
dispatching here; nothing in this module guards against overflow.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b):
    cdef i64 q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


def det(rows):
    """Bareiss determinant; every intermediate is a minor of the input."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef i64 *M = <i64 *> malloc(n * n * sizeof(i64))
    if M == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef i64 pivot, prev = 1, mik, tmp
    cdef int sign = 1
    cdef bint found
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                M[i * n + j] = row[j]
        for k in range(n - 1):
            if M[k * n + k] == 0:
                found = False
                for i in range(k + 1, n):
                    if M[i * n + k] != 0:
                        for j in range(n):
                            tmp = M[k * n + j]
                            M[k * n + j] = M[i * n + j]
                            M[i * n + j] = tmp
                        sign = -sign
                        found = True
                        break
                if not found:
                    return 0
            pivot = M[k * n + k]
            for i in range(k + 1, n):
                mik = M[i * n + k]
                for j in range(k + 1, n):
                    M[i * n + j] = (M[i * n + j] * pivot - mik * M[k * n + j]) / prev
            prev = pivot
        return sign * M[n * n - 1]
    finally:
        free(M)


def box_points(A, b, lo, hi, Py_ssize_t limit=0):
    """Integer points x with lo <= x <= hi and A x >= b, lexicographic order."""
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t m = len(A)
    out = []
    if n == 0:
        if all(bi <= 0 for bi in b):
            out.append(())
        return out
    cdef i64 *a = <i64 *> malloc((m * n + 1) * sizeof(i64))
    cdef i64 *rhs = <i64 *> malloc((m + 1) * sizeof(i64))
    cdef i64 *partial = <i64 *> malloc((m + 1) * sizeof(i64))
    cdef i64 *x = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *blo = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *bhi = <i64 *> malloc(n * sizeof(i64))
    cdef Py_ssize_t r, k, kk
    cdef i64 low, high, c, q, coef, v
    cdef bint feasible
    if not (a and rhs and partial and x and blo and bhi):
        free(a); free(rhs); free(partial); free(x); free(blo); free(bhi)
        raise MemoryError()
    try:
        for r in range(m):
            row = A[r]
            for k in range(n):
                a[r * n + k] = row[k]
            rhs[r] = b[r]
            partial[r] = 0
        for k in range(n):
            blo[k] = lo[k]
            bhi[k] = hi[k]
            x[k] = blo[k]
        if blo[n - 1] > bhi[n - 1]:
            return out
        for k in range(n - 1):
            if blo[k] > bhi[k]:
                return out
        # odometer over the first n-1 coordinates; partial sums kept incrementally
        for k in range(n - 1):
            for r in range(m):
                partial[r] += a[r * n + k] * x[k]
        while True:
            low = blo[n - 1]
            high = bhi[n - 1]
            feasible = True
            for r in range(m):
                coef = a[r * n + n - 1]
                c = rhs[r] - partial[r]
                if coef > 0:
                    q = -floordiv(-c, coef)
                    if q > low:
                        low = q
                elif coef < 0:
                    q = floordiv(c, coef)
                    if q < high:
                        high = q
                elif c > 0:
                    feasible = False
                    break
                if low > high:
                    feasible = False
                    break
            if feasible:
                for v in range(low, high + 1):
                    pt = [x[kk] for kk in range(n - 1)]
                    pt.append(v)
                    out.append(tuple(pt))
                    if limit and len(out) >= limit:
                        return out
            # advance odometer
            k = n - 2
            while k >= 0:
                if x[k] < bhi[k]:
                    x[k] += 1
                    for r in range(m):
                        partial[r] += a[r * n + k]
                    break
                for r in range(m):
                    partial[r] -= a[r * n + k] * (x[k] - blo[k])
                x[k] = blo[k]
                k -= 1
            if k < 0:
                return out
    finally:
        free(a); free(rhs); free(partial); free(x); free(blo); free(bhi)


def tight_sets(A, b, points):
    """For each point, the tuple of row indices r with A[r] . p == b[r]."""
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef i64 *a = <i64 *> malloc((m * n + 1) * sizeof(i64))
    cdef i64 *rhs = <i64 *> malloc((m + 1) * sizeof(i64))
    cdef i64 *p = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef Py_ssize_t r, k
    cdef i64 s
    if not (a and rhs and p):
        free(a); free(rhs); free(p)
        raise MemoryError()
    out = []
    try:
        for r in range(m):
            row = A[r]
            for k in range(n):
                a[r * n + k] = row[k]
            rhs[r] = b[r]
        for pt in points:
            for k in range(n):
                p[k] = pt[k]
            hit = []
            for r in range(m):
                s = 0
                for k in range(n):
                    s += a[r * n + k] * p[k]
                if s == rhs[r]:
                    hit.append(r)
            out.append(tuple(hit))
        return out
    finally:
        free(a); free(rhs); free(p)
