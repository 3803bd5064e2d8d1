"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints; rational vectors are
tuples of :class:`fractions.Fraction`. Nothing here touches floats.
"""

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from latpoly import kernels

IntMatrix = tuple[tuple[int, ...], ...]
RationalVector = tuple[Fraction, ...]


def as_matrix(rows) -> IntMatrix:
    mat = tuple(tuple(int(x) for x in r) for r in rows)
    if mat and len({len(r) for r in mat}) != 1:
        raise ValueError("ragged matrix")
    return mat


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M) -> IntMatrix:
    return tuple(zip(*M)) if M else ()


def matmul(A, B):
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def det(M) -> int:
    """Exact determinant of a square integer matrix."""
    if any(len(r) != len(M) for r in M):
        raise ValueError("determinant of a non-square matrix")
    return kernels.det([list(r) for r in M])


def hermite_normal_form(M) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``. ``H`` is in
    row echelon form, pivots are positive, entries above a pivot ``p`` lie in
    ``[0, p)``, and zero rows come last.
    """
    H = [list(r) for r in as_matrix(M)]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [list(r) for r in identity(m)]
    row = 0
    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[row][col]
            g, x, y = xgcd(a, b)
            p, q = -b // g, a // g
            for T in (H, U):
                r0, r1 = T[row], T[i]
                T[row] = [x * u + y * v for u, v in zip(r0, r1)]
                T[i] = [p * u + q * v for u, v in zip(r0, r1)]
        pivot = H[row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[row] = [-v for v in H[row]]
            U[row] = [-v for v in U[row]]
            pivot = -pivot
        for i in range(row):
            f = H[i][col] // pivot
            if f:
                H[i] = [u - f * v for u, v in zip(H[i], H[row])]
                U[i] = [u - f * v for u, v in zip(U[i], U[row])]
        row += 1
    return as_matrix(H), as_matrix(U)


def is_hermite_normal_form(H) -> bool:
    """Shape test used by tests and oracles; mirrors the HNF convention above."""
    last = -1
    zero_seen = False
    for i, r in enumerate(H):
        nz = [j for j, v in enumerate(r) if v]
        if not nz:
            zero_seen = True
            continue
        if zero_seen:
            return False
        j = nz[0]
        if j <= last or r[j] <= 0:
            return False
        for k in range(i):
            if not 0 <= H[k][j] < r[j]:
                return False
        last = j
    return True


def smith_invariants(M) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of the Smith normal form."""
    D = as_matrix(M)
    if not D or not D[0]:
        return ()
    # alternate row and column HNF until the matrix is diagonal
    while True:
        D, _ = hermite_normal_form(D)
        if all(v == 0 for i, r in enumerate(D) for j, v in enumerate(r) if i != j):
            break
        D, _ = hermite_normal_form(transpose(D))
        D = transpose(D)
        if all(v == 0 for i, r in enumerate(D) for j, v in enumerate(r) if i != j):
            break
    diag = [abs(D[i][i]) for i in range(min(len(D), len(D[0]))) if D[i][i]]
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return tuple(diag)


def rank(M) -> int:
    """Rank over the rationals."""
    rows = [list(map(Fraction, r)) for r in M]
    if not rows:
        return 0
    n = len(rows[0])
    rk = 0
    for col in range(n):
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(rk + 1, len(rows)):
            f = rows[i][col] / rows[rk][col]
            if f:
                rows[i] = [u - f * v for u, v in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def is_unimodular_basis(vectors: Sequence[Sequence[int]]) -> bool:
    """True iff the n given vectors of Z^n form a lattice basis."""
    vecs = as_matrix(vectors)
    n = len(vecs)
    if any(len(v) != n for v in vecs):
        raise ValueError(f"need {n} vectors of length {n}")
    return abs(det(vecs)) == 1


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Divide v by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in v)


def lattice_map_surjective(M) -> bool:
    """Does the t x n integer matrix M map Z^n onto Z^t?"""
    M = as_matrix(M)
    t = len(M)
    n = len(M[0]) if t else 0
    if t > n:
        raise ValueError(f"map Z^{n} -> Z^{t} cannot be surjective (t > n)")
    inv = smith_invariants(M)
    return len(inv) == t and all(d == 1 for d in inv)


def solve_exact(A, b) -> Optional[RationalVector]:
    """Unique exact solution of A x = b, or None.

    None is returned when A lacks full column rank or the system is
    inconsistent.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [[Fraction(v) for v in A[i]] + [Fraction(b[i])] for i in range(m)]
    rk = 0
    pivots = []
    for col in range(n):
        piv = next((i for i in range(rk, m) if rows[i][col] != 0), None)
        if piv is None:
            return None
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = 1 / rows[rk][col]
        rows[rk] = [v * inv for v in rows[rk]]
        for i in range(m):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [u - f * v for u, v in zip(rows[i], rows[rk])]
        pivots.append(col)
        rk += 1
    if any(rows[i][n] != 0 for i in range(rk, m)):
        return None
    return tuple(rows[i][n] for i in range(n))


def integer_kernel(M, ncols: Optional[int] = None) -> IntMatrix:
    """Basis (as rows) of the saturated lattice {x in Z^n : M x = 0}.

    The basis is returned in Hermite normal form, so equal kernels give
    equal output.
    """
    M = as_matrix(M)
    n = len(M[0]) if M else ncols
    if n is None:
        raise ValueError("column count unknown for an empty matrix")
    if not M:
        return identity(n)
    H, U = hermite_normal_form(transpose(M))
    basis = [U[i] for i in range(n) if not any(H[i])]
    if not basis:
        return ()
    return tuple(r for r in hermite_normal_form(basis)[0] if any(r))


def saturated_span(vectors, n: int) -> IntMatrix:
    """HNF basis of span_Q(vectors) intersected with Z^n."""
    vecs = [v for v in as_matrix(vectors) if any(v)]
    if not vecs:
        return ()
    complement = integer_kernel(vecs)
    if not complement:
        return identity(n)
    return integer_kernel(complement)


def lattice_coordinates(basis, v) -> tuple[int, ...]:
    """Coordinates of v in the lattice spanned by the rows of ``basis``."""
    sol = solve_exact(transpose(basis), v)
    if sol is None or any(c.denominator != 1 for c in sol):
        raise ValueError(f"{tuple(v)} is not in the lattice")
    return tuple(int(c) for c in sol)


def normal_vector(diffs) -> tuple[int, ...]:
    """Primitive integer vector orthogonal to d-1 independent vectors in Z^d.

    Computed by cofactor expansion (generalized cross product).
    """
    diffs = as_matrix(diffs)
    d = len(diffs) + 1
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in diffs]
        out.append((-1) ** j * det(minor))
    return primitive_vector(out)
