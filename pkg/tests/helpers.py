"""Shared helpers for the test suite."""

from hypothesis import strategies as st

from latpoly.polytope import LatticePolytope


def unimodular(n, ops):
    """Product of elementary row operations given as (i, j, k) triples."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, j, k in ops:
        i, j = i % n, j % n
        if i == j:
            M[i] = [-x for x in M[i]]
        else:
            M[i] = [a + k * b for a, b in zip(M[i], M[j])]
    return M


def transform(P, M, shift):
    return LatticePolytope([tuple(sum(a * b for a, b in zip(row, v)) + s for row, s in zip(M, shift))
                            for v in P.vertices])


ops = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(-2, 2)), max_size=4)


def oracle_partitions(P, t):
    """Fiber partitions of all lattice-surjective affine maps taking P onto Delta_t.

    Brute force over integer matrices with entries in [-B, B], B the
    largest coordinate spread of P. A map sends P onto Delta_t exactly when
    every vertex lands on a vertex of Delta_t and all t+1 are hit, so rows
    are first filtered to those taking only two adjacent values on P.
    """
    from itertools import combinations, product

    from latpoly.linalg import lattice_map_surjective

    V = P.vertices
    n = P.ambient_dim
    B = max(1, max(max(v[k] for v in V) - min(v[k] for v in V) for k in range(n)))
    rows = []
    for u in product(range(-B, B + 1), repeat=n):
        vals = [sum(a * b for a, b in zip(u, v)) for v in V]
        lo = min(vals)
        if max(vals) - lo == 1:
            rows.append((u, tuple(x - lo for x in vals)))
    targets = {tuple(int(i == j) for j in range(t)) for i in range(t)} | {(0,) * t}
    found = set()
    for combo in combinations(rows, t):
        images = [tuple(vals[i] for _, vals in combo) for i in range(len(V))]
        if set(images) != targets:
            continue
        if not lattice_map_surjective([u for u, _ in combo]):
            continue
        blocks = {}
        for i, img in enumerate(images):
            blocks.setdefault(img, []).append(i)
        found.add(tuple(sorted(tuple(b) for b in blocks.values())))
    return found
