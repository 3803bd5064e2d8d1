"""Cayley sums: construction, and detection of projections onto Delta_t.

A Cayley structure of length t+1 on P is a lattice projection mapping P
onto the unimodular simplex conv(0, e_1, ..., e_t). Its coordinate
functions are affine functionals that take only the values 0 and 1 on P,
so detection reduces to finding families of width-one functionals with
disjoint supports.
"""

from dataclasses import dataclass
from typing import Sequence

from latpoly import kernels
from latpoly.linalg import (
    as_matrix,
    dot,
    integer_kernel,
    lattice_coordinates,
    lattice_map_surjective,
    rank,
    solve_exact,
)
from latpoly.polytope import LatticePolytope, normally_equivalent


@dataclass(frozen=True, order=True)
class WidthOneFunctional:
    """Affine functional x -> linear . x + offset with values {0, 1} on P."""

    linear: tuple
    offset: int

    def __call__(self, x) -> int:
        return dot(self.linear, x) + self.offset


@dataclass(frozen=True)
class CayleyDecomposition:
    """Projection of P onto Delta_t together with its fibers.

    ``partition[i]`` lists the indices of P's vertices mapped to the i-th
    vertex of Delta_t (0, e_1, ..., e_t) and ``slices[i]`` is their hull.
    """

    t: int
    projection: tuple
    offset: tuple
    slices: tuple
    partition: tuple
    slices_normally_equivalent: bool

    def image(self, x) -> tuple:
        return tuple(dot(row, x) + c for row, c in zip(self.projection, self.offset))


def cayley_sum(slices: Sequence[LatticePolytope]) -> LatticePolytope:
    """conv(R_0 x {0}, R_1 x {e_1}, ..., R_k x {e_k}) in Z^(m+k)."""
    if len(slices) < 2:
        raise ValueError("a Cayley sum needs at least two slices")
    m = slices[0].ambient_dim
    if any(R.ambient_dim != m for R in slices):
        raise ValueError("slices live in different ambient dimensions")
    k = len(slices) - 1
    pts = []
    for i, R in enumerate(slices):
        tail = tuple(int(j == i) for j in range(1, k + 1))
        pts += [v + tail for v in R.vertices]
    return LatticePolytope(pts)


def cayley_config(configs: Sequence[Sequence[Sequence[int]]]) -> list:
    """The point configuration (A_1 x 0) u (A_2 x e_1) u ... u (A_r x e_(r-1))."""
    if len(configs) < 2:
        raise ValueError("need at least two configurations")
    dims = {len(p) for A in configs for p in A}
    if len(dims) > 1:
        raise ValueError("configurations live in different dimensions")
    r = len(configs)
    out = set()
    for i, A in enumerate(configs):
        tail = tuple(int(j == i) for j in range(1, r))
        out.update(tuple(p) + tail for p in A)
    return sorted(out)


def _width_one_local(points) -> list:
    """Nonzero u in Z^d with max u.p - min u.p = 1 over full-dimensional points."""
    d = len(points[0])
    base = points[0]
    diffs = []
    for p in points[1:]:
        cand = diffs + [tuple(a - b for a, b in zip(p, base))]
        if rank(cand) == len(cand):
            diffs = cand
        if len(diffs) == d:
            break
    # u = D^-1 w with |w| <= 1 bounds every coordinate of u
    bound = []
    for k in range(d):
        e = [0] * d
        e[k] = 1
        col = solve_exact([list(r) for r in zip(*diffs)], e)
        # row k of D^-1 solves D^T z = e_k
        bound.append(int(sum(abs(c) for c in col)))
    rows, rhs = [], []
    seen = set()
    for p in points:
        for q in points:
            if p == q:
                continue
            diff = tuple(a - b for a, b in zip(p, q))
            if diff in seen:
                continue
            seen.add(diff)
            rows.append([-c for c in diff])
            rhs.append(-1)
    us = kernels.box_points(rows, rhs, [-b for b in bound], bound)
    return [u for u in us if any(u)]


def width_one_functionals(P: LatticePolytope) -> list:
    """All integer affine functionals with values in {0, 1} on P, attaining both.

    Computed in the lattice of the span of P and lifted to Z^n.
    """
    if P.dim == 0:
        return []
    loc = list(P._local_vertices)
    out = []
    for u in _width_one_local(loc):
        c = -min(dot(u, v) for v in loc)
        # lift() moves a right-hand side, so negate to move an offset
        w, rhs = P.frame.lift(u, -c)
        out.append(WidthOneFunctional(w, -rhs))
    return sorted(out)


def _slices_equivalent(slices, kernel_basis) -> bool:
    if not kernel_basis:
        return True
    fibers = []
    for R in slices:
        u = R.vertices[0]
        pts = [lattice_coordinates(kernel_basis, tuple(a - b for a, b in zip(v, u)))
               for v in R.vertices]
        fibers.append(LatticePolytope(pts))
    return all(normally_equivalent(fibers[0], F) for F in fibers[1:])


def _decomposition(P, funcs, blocks) -> CayleyDecomposition:
    # blocks[0] maps to the origin; each other block gets its own coordinate
    t = len(blocks) - 1
    projection = tuple(f.linear for f in funcs)
    offset = tuple(f.offset for f in funcs)
    slices = tuple(LatticePolytope([P.vertices[i] for i in B]) for B in blocks)
    kernel_basis = integer_kernel(as_matrix(projection))
    return CayleyDecomposition(
        t=t,
        projection=projection,
        offset=offset,
        slices=slices,
        partition=tuple(tuple(B) for B in blocks),
        slices_normally_equivalent=_slices_equivalent(slices, kernel_basis),
    )


def cayley_decompose(P: LatticePolytope, t: int) -> list:
    """All Cayley structures of length t+1, one per fiber partition of the vertices."""
    if not 1 <= t <= P.dim:
        raise ValueError(f"t must lie in [1, {P.dim}], got {t}")
    funcs = width_one_functionals(P)
    nv = len(P.vertices)
    full = (1 << nv) - 1
    support = {}
    for f in funcs:
        mask = sum(1 << i for i, v in enumerate(P.vertices) if f(v) == 1)
        support.setdefault(mask, f)
    masks = sorted(support)
    found = {}

    def rec(start, chosen, used):
        if len(chosen) == t:
            if used != full:
                key = frozenset(chosen + [full & ~used])
                found.setdefault(key, list(chosen))
            return
        for k in range(start, len(masks)):
            m = masks[k]
            if m & used:
                continue
            rec(k + 1, chosen + [m], used | m)

    rec(0, [], 0)
    out = []
    for key in found:
        blocks = sorted((sorted(i for i in range(nv) if (m >> i) & 1) for m in key))
        # every block is a support: it equals 1 minus the other coordinates
        funcs_for = [support[sum(1 << i for i in B)] for B in blocks[1:]]
        out.append(_decomposition(P, funcs_for, blocks))
    out.sort(key=lambda d: d.partition)
    return out


def max_cayley_length(P: LatticePolytope) -> int:
    """Largest t+1 such that P has a Cayley structure of length t+1 (1 if none)."""
    for t in range(P.dim, 0, -1):
        if cayley_decompose(P, t):
            return t + 1
    return 1


def is_projection_valid(P: LatticePolytope, dec: CayleyDecomposition) -> bool:
    """Lattice-surjective, and every vertex lands on a vertex of Delta_t."""
    t = dec.t
    targets = [tuple(0 for _ in range(t))] + [tuple(int(i == j) for j in range(t)) for i in range(t)]
    for i, block in enumerate(dec.partition):
        for v in block:
            if dec.image(P.vertices[v]) != targets[i]:
                return False
    return lattice_map_surjective(dec.projection)


__all__ = [
    "CayleyDecomposition",
    "WidthOneFunctional",
    "cayley_config",
    "cayley_decompose",
    "cayley_sum",
    "is_projection_valid",
    "max_cayley_length",
    "width_one_functionals",
]
