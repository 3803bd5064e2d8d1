"""Exact convex geometry for lattice and rational polytopes.

A lattice polytope is stored by its vertices. Everything combinatorial
(facets, faces, volumes, fans) is computed in the lattice of the affine
span, reached through a :class:`Frame`, so lower-dimensional polytopes are
handled intrinsically.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import gcd
from typing import Optional, Sequence, Union

from latpoly import kernels
from latpoly.linalg import (
    IntMatrix,
    as_matrix,
    det,
    dot,
    hermite_normal_form,
    identity,
    integer_kernel,
    primitive_vector,
    rank,
    saturated_span,
    transpose,
)


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _floor(x) -> int:
    return x.numerator // x.denominator if isinstance(x, Fraction) else int(x)


def _ceil(x) -> int:
    return -((-x.numerator) // x.denominator) if isinstance(x, Fraction) else int(x)


@dataclass(frozen=True)
class Frame:
    """Lattice coordinates on the affine span of a point set.

    ``basis`` (HNF, d x n) is a basis of the saturated lattice parallel to
    the span; ``dual`` satisfies ``basis @ dual.T == I`` so that local
    coordinates are the integer linear map ``x -> (x - origin) @ dual.T``.
    """

    origin: tuple
    basis: IntMatrix
    dual: IntMatrix
    equations: IntMatrix

    @classmethod
    def of(cls, points) -> "Frame":
        origin = min(points)
        n = len(origin)
        basis = saturated_span([_sub(p, origin) for p in points], n)
        d = len(basis)
        if d == 0:
            return cls(origin, (), (), identity(n))
        H, U = hermite_normal_form(transpose(basis))
        assert all(H[i][j] == int(i == j) for i in range(d) for j in range(d))
        eqs = U[d:]
        if eqs:
            eqs = tuple(r for r in hermite_normal_form(eqs)[0] if any(r))
        return cls(origin, basis, U[:d], eqs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def local(self, x) -> tuple:
        diff = _sub(x, self.origin)
        return tuple(dot(diff, w) for w in self.dual)

    def ambient(self, y) -> tuple:
        out = list(self.origin)
        for c, row in zip(y, self.basis):
            if c:
                for k, v in enumerate(row):
                    out[k] += c * v
        return tuple(out)

    def lift(self, a, b):
        """Ambient inequality agreeing with local ``a . y >= b`` on the span."""
        w = [0] * len(self.origin)
        for c, row in zip(a, self.dual):
            for k, v in enumerate(row):
                w[k] += c * v
        w = tuple(w)
        return w, b + dot(w, self.origin)


def _facet_from(points, idx, interior_sum, d):
    base = points[idx[0]]
    a = _normal([_sub(points[i], base) for i in idx[1:]])
    b = dot(a, base)
    if dot(a, interior_sum) < (d + 1) * b:
        a = tuple(-x for x in a)
        b = -b
    return a, b


def _normal(diffs):
    d = len(diffs) + 1
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in diffs]
        out.append((-1) ** j * kernels.det(minor))
    return primitive_vector(out)


def _hull(points, d):
    """Beneath-beyond hull of full-dimensional integer points in Z^d.

    Returns (vertex indices, sorted list of (normal, rhs) facets) with
    facets written as ``a . y >= b`` and ``a`` primitive.
    """
    if d == 0:
        return [0], []
    if d == 1:
        vals = [p[0] for p in points]
        lo = min(range(len(points)), key=lambda i: vals[i])
        hi = max(range(len(points)), key=lambda i: vals[i])
        return sorted({lo, hi}), sorted([((1,), vals[lo]), ((-1,), -vals[hi])])

    # initial simplex
    simplex = [0]
    diffs = []
    for i in range(1, len(points)):
        cand = diffs + [_sub(points[i], points[0])]
        if rank(cand) == len(cand):
            simplex.append(i)
            diffs = cand
            if len(simplex) == d + 1:
                break
    interior = tuple(sum(points[i][k] for i in simplex) for k in range(d))
    facets = {}
    for drop in range(d + 1):
        idx = tuple(sorted(simplex[:drop] + simplex[drop + 1:]))
        facets[idx] = _facet_from(points, idx, interior, d)

    used = set(simplex)
    for i, p in enumerate(points):
        if i in used:
            continue
        visible = [f for f, (a, b) in facets.items() if dot(a, p) < b]
        if not visible:
            continue
        ridges = {}
        for f in visible:
            for drop in range(d):
                r = f[:drop] + f[drop + 1:]
                ridges[r] = ridges.get(r, 0) + 1
        for f in visible:
            del facets[f]
        for r, cnt in ridges.items():
            if cnt == 1:
                idx = tuple(sorted(r + (i,)))
                facets[idx] = _facet_from(points, idx, interior, d)

    merged = {}
    for idx, (a, b) in facets.items():
        merged.setdefault((a, b), set()).update(idx)
    planes = sorted(merged)
    candidates = sorted(set().union(*merged.values()))
    A = [a for a, _ in planes]
    bs = [b for _, b in planes]
    tight = kernels.tight_sets(A, bs, [points[i] for i in candidates])
    verts = [i for i, t in zip(candidates, tight) if rank([A[r] for r in t]) == d]
    return verts, planes


@dataclass(frozen=True)
class HRep:
    """Irredundant description {x : A x >= b, E x = e} with primitive rows of A."""

    A: IntMatrix
    b: tuple
    E: IntMatrix = ()
    e: tuple = ()

    def contains(self, x, strict=False) -> bool:
        if any(dot(r, x) != v for r, v in zip(self.E, self.e)):
            return False
        if strict:
            return all(dot(r, x) > v for r, v in zip(self.A, self.b))
        return all(dot(r, x) >= v for r, v in zip(self.A, self.b))


@dataclass(frozen=True)
class Face:
    """A nonempty face, given by indices into its polytope's vertex list."""

    dim: int
    vertex_indices: frozenset
    active_facets: frozenset
    polytope: "LatticePolytope" = field(compare=False, repr=False, hash=False)

    @property
    def vertices(self) -> tuple:
        return tuple(self.polytope.vertices[i] for i in sorted(self.vertex_indices))

    @property
    def codim(self) -> int:
        return self.polytope.dim - self.dim


@dataclass(frozen=True)
class NormalFan:
    """Maximal cones, one per vertex, as sorted tuples of primitive normals.

    Normals are written in the coordinates of the lattice ``basis`` of the
    polytope's span, so fans of polytopes in different spans never compare
    equal.
    """

    basis: IntMatrix
    cones: frozenset

    def __len__(self):
        return len(self.cones)


class FaceLattice:
    """All nonempty faces of a polytope, with normalized volumes."""

    def __init__(self, P: "LatticePolytope"):
        self.polytope = P
        d = P.dim
        full = frozenset(range(len(P.vertices)))
        facet_sets = [frozenset(s) for s in P._facet_vertex_sets]
        faces = {full}
        frontier = set(facet_sets)
        faces |= frontier
        while frontier:
            new = set()
            for F in frontier:
                for G in facet_sets:
                    H = F & G
                    if H and H not in faces:
                        new.add(H)
            faces |= new
            frontier = new
        loc = P._local_vertices
        out = []
        for F in faces:
            idx = sorted(F)
            dim = rank([_sub(loc[i], loc[idx[0]]) for i in idx[1:]]) if len(idx) > 1 else 0
            active = frozenset(k for k, S in enumerate(facet_sets) if F <= S) if F != full else frozenset()
            out.append(Face(dim, F, active, P))
        out.sort(key=lambda f: (f.dim, sorted(f.vertex_indices)))
        self.faces = tuple(out)
        self.by_dim = {k: tuple(f for f in out if f.dim == k) for k in range(d + 1)}
        self._index = {f.vertex_indices: f for f in out}

    def __iter__(self):
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    @property
    def f_vector(self) -> tuple:
        return tuple(len(self.by_dim[k]) for k in sorted(self.by_dim))

    def facets_of(self, F: Face) -> tuple:
        if F.dim == 0:
            return ()
        return tuple(G for G in self.by_dim[F.dim - 1] if G.vertex_indices < F.vertex_indices)

    def face(self, vertex_indices) -> Face:
        return self._index[frozenset(vertex_indices)]

    @cached_property
    def volumes(self) -> dict:
        """Normalized volume of every face, computed bottom-up by pyramids."""
        loc = self.polytope._local_vertices
        vol = {}
        for F in self.faces:
            idx = sorted(F.vertex_indices)
            if F.dim == 0:
                vol[F.vertex_indices] = 1
            elif F.dim == 1:
                g = 0
                for c in _sub(loc[idx[1]], loc[idx[0]]):
                    g = gcd(g, c)
                vol[F.vertex_indices] = g
        for k in range(2, self.polytope.dim + 1):
            for F in self.by_dim[k]:
                idx = sorted(F.vertex_indices)
                frame = Frame.of([loc[i] for i in idx])
                apex = idx[0]
                ya = frame.local(loc[apex])
                total = 0
                for G in self.facets_of(F):
                    if apex in G.vertex_indices:
                        continue
                    gl = [frame.local(loc[i]) for i in sorted(G.vertex_indices)]
                    normal = integer_kernel([_sub(p, gl[0]) for p in gl[1:]])
                    assert len(normal) == 1
                    height = abs(dot(normal[0], _sub(ya, gl[0])))
                    total += height * vol[G.vertex_indices]
                vol[F.vertex_indices] = total
        return vol

    def volume(self, F: Face) -> int:
        return self.volumes[F.vertex_indices]


class LatticePolytope:
    """Convex hull of finitely many points of Z^n, stored by its vertices."""

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = sorted({tuple(int(c) for c in p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points have different dimensions")
        frame = Frame.of(pts)
        local = [frame.local(p) for p in pts]
        vidx, planes = _hull(local, frame.dim)
        self.ambient_dim = len(pts[0])
        self.dim = frame.dim
        self.frame = frame
        self.vertices = tuple(pts[i] for i in vidx)
        self._local_vertices = tuple(local[i] for i in vidx)
        self._local_facets = tuple(planes)

    def __repr__(self):
        return f"LatticePolytope({[list(v) for v in self.vertices]})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def _facet_vertex_sets(self) -> tuple:
        if self.dim == 0:
            return ()
        A = [a for a, _ in self._local_facets]
        b = [b for _, b in self._local_facets]
        tight = kernels.tight_sets(A, b, list(self._local_vertices))
        sets = [set() for _ in A]
        for i, t in enumerate(tight):
            for r in t:
                sets[r].add(i)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def hrep(self) -> HRep:
        rows = [self.frame.lift(a, b) for a, b in self._local_facets]
        E = self.frame.equations
        return HRep(tuple(a for a, _ in rows), tuple(b for _, b in rows),
                    E, tuple(dot(r, self.frame.origin) for r in E))

    @cached_property
    def face_lattice(self) -> FaceLattice:
        return FaceLattice(self)

    @cached_property
    def edges(self) -> tuple:
        """Vertex index pairs of the edges."""
        if self.dim == 1:
            return ((0, 1),)
        return tuple(tuple(sorted(F.vertex_indices)) for F in self.face_lattice.by_dim.get(1, ()))

    def volume(self) -> int:
        return normalized_volume(self)

    def contains(self, x, strict=False) -> bool:
        if any(dot(r, x) != dot(r, self.frame.origin) for r in self.frame.equations):
            return False
        y = self.frame.local(x)
        if strict:
            return all(dot(a, y) > b for a, b in self._local_facets)
        return all(dot(a, y) >= b for a, b in self._local_facets)

    def translate(self, u) -> "LatticePolytope":
        return LatticePolytope([tuple(a + b for a, b in zip(v, u)) for v in self.vertices])


def convex_hull(points) -> tuple[LatticePolytope, HRep]:
    """Vertices and irredundant H-description of conv(points)."""
    P = LatticePolytope(points)
    return P, P.hrep


def face_lattice(P: LatticePolytope) -> FaceLattice:
    return P.face_lattice


def normalized_volume(F: Union[Face, LatticePolytope]) -> int:
    """dim! times Euclidean volume, measured in the lattice of the span."""
    if isinstance(F, LatticePolytope):
        fl = F.face_lattice
        return fl.volume(fl.by_dim[F.dim][0])
    return F.polytope.face_lattice.volume(F)


def lattice_points(P, interior: bool = False) -> list:
    """Lattice points of a lattice or rational polytope, sorted.

    With ``interior=True`` only points of the relative interior are kept.
    """
    if isinstance(P, RationalPolytope):
        return P.lattice_points(interior)
    if P.dim == 0:
        return [P.vertices[0]]
    loc = P._local_vertices
    lo = [min(v[k] for v in loc) for k in range(P.dim)]
    hi = [max(v[k] for v in loc) for k in range(P.dim)]
    A = [a for a, _ in P._local_facets]
    b = [b for _, b in P._local_facets]
    pts = kernels.box_points(A, b, lo, hi, strict=interior)
    return sorted(P.frame.ambient(y) for y in pts)


def dilate(P: LatticePolytope, t: int) -> LatticePolytope:
    if t <= 0:
        raise ValueError(f"dilation factor must be positive, got {t}")
    return LatticePolytope([tuple(t * c for c in v) for v in P.vertices])


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("Minkowski sum of polytopes in different dimensions")
    return LatticePolytope([tuple(a + b for a, b in zip(p, q))
                            for p in P.vertices for q in Q.vertices])


def normal_fan(P: LatticePolytope) -> NormalFan:
    """Normal fan in the lattice of the span of P."""
    cones = []
    normals = [a for a, _ in P._local_facets]
    for i in range(len(P.vertices)):
        cone = tuple(sorted(normals[k] for k, S in enumerate(P._facet_vertex_sets) if i in S))
        cones.append(cone)
    return NormalFan(P.frame.basis, frozenset(cones))


def normally_equivalent(P: LatticePolytope, Q: LatticePolytope) -> bool:
    """Equality of normal fans in a shared lattice.

    Polytopes whose affine spans are not parallel are never normally
    equivalent; isomorphism of fans up to GL(n, Z) is not tested.
    """
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("polytopes live in different ambient dimensions")
    return normal_fan(P) == normal_fan(Q)


# ---------------------------------------------------------------------------
# rational polytopes given by inequalities


@lru_cache(maxsize=256)
def _bases(A: IntMatrix):
    """Nonsingular n-row subsets of A with adjugate and determinant."""
    n = len(A[0])
    out = []
    for J in combinations(range(len(A)), n):
        M = [A[j] for j in J]
        D = det(M)
        if D == 0:
            continue
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [r[:j] + r[j + 1:] for k, r in enumerate(M) if k != i]
                adj[j][i] = (-1) ** (i + j) * det(minor)
        out.append((J, tuple(map(tuple, adj)), D))
    return tuple(out)


class RationalPolytope:
    """Bounded polyhedron {x : A x >= b} with integer A and rational b.

    Vertices are found as basic feasible solutions, which is exhaustive and
    exact but meant for desk-scale inputs.
    """

    def __init__(self, A, b):
        self.A = as_matrix(A)
        self.b = tuple(Fraction(x) for x in b)
        self.ambient_dim = len(self.A[0])
        verts = set()
        for J, adj, D in _bases(self.A):
            bJ = [self.b[j] for j in J]
            x = tuple(sum(adj[i][k] * bJ[k] for k in range(len(J))) / D for i in range(len(J)))
            if all(dot(r, x) >= bi for r, bi in zip(self.A, self.b)):
                verts.add(x)
        self.vertices = tuple(sorted(verts))

    def __repr__(self):
        return f"RationalPolytope(dim={self.dim}, vertices={[list(map(str, v)) for v in self.vertices]})"

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        v0 = self.vertices[0]
        return rank([_sub(v, v0) for v in self.vertices[1:]]) if len(self.vertices) > 1 else 0

    @cached_property
    def tight(self) -> tuple:
        return tuple(frozenset(r for r, (a, bi) in enumerate(zip(self.A, self.b)) if dot(a, v) == bi)
                     for v in self.vertices)

    @cached_property
    def implicit_equalities(self) -> tuple:
        if not self.vertices:
            return ()
        return tuple(sorted(frozenset.intersection(*self.tight)))

    @cached_property
    def facets(self) -> tuple:
        """Indices of facet-defining rows, one per facet (lowest index wins)."""
        if self.dim <= 0:
            return ()
        eq = set(self.implicit_equalities)
        seen = {}
        for r in range(len(self.A)):
            if r in eq:
                continue
            S = [i for i, t in enumerate(self.tight) if r in t]
            if not S:
                continue
            v0 = self.vertices[S[0]]
            d = rank([_sub(self.vertices[i], v0) for i in S[1:]]) if len(S) > 1 else 0
            if d == self.dim - 1:
                seen.setdefault(frozenset(S), r)
        return tuple(sorted(seen.values()))

    def contains(self, x, strict=False) -> bool:
        if strict:
            return all(dot(a, x) > bi for a, bi in zip(self.A, self.b))
        return all(dot(a, x) >= bi for a, bi in zip(self.A, self.b))

    def normal_fan(self) -> Optional[NormalFan]:
        """Normal fan of a full-dimensional polytope; None after a dimension drop."""
        if self.dim != self.ambient_dim:
            return None
        facets = set(self.facets)
        cones = frozenset(tuple(sorted(self.A[r] for r in t if r in facets)) for t in self.tight)
        return NormalFan(identity(self.ambient_dim), cones)

    def scaled(self, t) -> "RationalPolytope":
        return RationalPolytope(self.A, [t * bi for bi in self.b])

    def lattice_points(self, interior: bool = False) -> list:
        if not self.vertices:
            return []
        n = self.ambient_dim
        lo = [_ceil(min(v[k] for v in self.vertices)) for k in range(n)]
        hi = [_floor(max(v[k] for v in self.vertices)) for k in range(n)]
        if any(l > h for l, h in zip(lo, hi)):
            return []
        eq = set(self.implicit_equalities)
        A, b = [], []
        for r, (row, bi) in enumerate(zip(self.A, self.b)):
            q = bi.denominator
            A.append([q * a for a in row])
            b.append(bi.numerator)
            if r in eq:
                A.append([-q * a for a in row])
                b.append(-bi.numerator)
        if not interior:
            return kernels.box_points(A, b, lo, hi)
        # strict only on rows that are not implicit equalities
        strict_b = []
        k = 0
        for r in range(len(self.A)):
            if r in eq:
                strict_b += [b[k], b[k + 1]]
                k += 2
            else:
                # integer a.x > p/q  <=>  q a.x >= p + 1
                strict_b.append(b[k] + 1)
                k += 1
        return kernels.box_points(A, strict_b, lo, hi)


# ---------------------------------------------------------------------------
# standard polytopes


def simplex(n: int, scale: int = 1) -> LatticePolytope:
    """The standard simplex scale * conv(0, e_1, ..., e_n)."""
    pts = [tuple(0 for _ in range(n))]
    pts += [tuple(scale * int(i == j) for j in range(n)) for i in range(n)]
    return LatticePolytope(pts)


def cube(n: int, scale: int = 1) -> LatticePolytope:
    return LatticePolytope(list(product((0, scale), repeat=n)))


def product_polytope(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    return LatticePolytope([p + q for p in P.vertices for q in Q.vertices])


def full_dimensional_copy(P: LatticePolytope) -> LatticePolytope:
    """A lattice-equivalent copy of P living in Z^dim(P)."""
    if P.is_full_dimensional:
        return P
    return LatticePolytope(P._local_vertices)
