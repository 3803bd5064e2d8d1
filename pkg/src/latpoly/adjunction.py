"""Polyhedral adjunction: adjoint polytopes, Q-codegree, nef value, codegree.

For a full-dimensional polytope with minimal description ``A x >= b`` the
adjoint polytope at parameter ``s`` moves every facet inward by ``s``
lattice units: ``P^(s) = {x : A x >= b + s}``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from latpoly import kernels, lp
from latpoly.linalg import dot, solve_exact
from latpoly.polytope import LatticePolytope, RationalPolytope, _bases


@total_ordering
class _Infinity:
    """Marker for an unbounded nef value; compares above every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("latpoly-infinity")


INFINITY = _Infinity()


@dataclass(frozen=True)
class AdjunctionProfile:
    dim: int
    mu: Fraction
    tau: object
    cd: int
    core: RationalPolytope


def _require_full(P: LatticePolytope):
    if not P.is_full_dimensional:
        raise ValueError(f"need a full-dimensional polytope, got dim {P.dim} in Z^{P.ambient_dim}")


def adjoint_polytope(P: LatticePolytope, s) -> RationalPolytope:
    """The rational polytope {x : A x >= b + s} (possibly empty)."""
    _require_full(P)
    s = Fraction(s)
    if s < 0:
        raise ValueError("adjoint parameter must be nonnegative")
    H = P.hrep
    return RationalPolytope(H.A, [bi + s for bi in H.b])


def _max_shift(P: LatticePolytope) -> lp.LPResult:
    # maximize s subject to A (lo + y) - s >= b, y >= 0, s >= 0
    H = P.hrep
    n = P.ambient_dim
    lo = [min(v[k] for v in P.vertices) for k in range(n)]
    rows = [[-a for a in row] + [1] for row in H.A]
    rhs = [dot(row, lo) - bi for row, bi in zip(H.A, H.b)]
    return lp.maximize([0] * n + [1], rows, rhs)


def q_codegree(P: LatticePolytope) -> Fraction:
    """Reciprocal of the largest s with P^(s) nonempty (solved as an LP)."""
    _require_full(P)
    res = _max_shift(P)
    if res.status != lp.OPTIMAL or res.value <= 0:
        raise RuntimeError(f"shift LP ended with status {res.status}")
    return 1 / res.value


def core(P: LatticePolytope) -> RationalPolytope:
    return adjoint_polytope(P, 1 / q_codegree(P))


class _FanTracker:
    """Decides N(P^(s)) == N(P) by following every vertex cone of P.

    The fan is unchanged exactly when, for each vertex v of P, the facets
    active at v still meet in one point of P^(s) that lies strictly inside
    every other shifted halfspace.
    """

    def __init__(self, P: LatticePolytope):
        H = P.hrep
        self.A = H.A
        self.b = tuple(Fraction(x) for x in H.b)
        self.active = [tuple(sorted(k for k, S in enumerate(P._facet_vertex_sets) if i in S))
                       for i in range(len(P.vertices))]
        self.vertices = P.vertices
        self.simple = all(len(t) == P.dim for t in self.active)

    def preserved(self, s) -> bool:
        for I in self.active:
            x = solve_exact([self.A[k] for k in I], [self.b[k] + s for k in I])
            if x is None:
                return False
            Iset = set(I)
            for k, (a, bk) in enumerate(zip(self.A, self.b)):
                if k not in Iset and not dot(a, x) > bk + s:
                    return False
        return True

    def breakpoints(self, s_max) -> list:
        """Every s in (0, s_max) where some tracked point meets another facet."""
        m = len(self.A)
        n = len(self.A[0])
        ones = [1] * n
        if self.simple:
            systems = [(I, v) for I, v in zip(self.active, self.vertices)]
        else:
            systems = []
            for J, _, _ in _bases(self.A):
                x0 = solve_exact([self.A[j] for j in J], [self.b[j] for j in J])
                systems.append((J, x0))
        cands = set()
        for J, x0 in systems:
            y = solve_exact([self.A[j] for j in J], ones)
            Jset = set(J)
            for k in range(m):
                if k in Jset:
                    continue
                alpha = dot(self.A[k], x0) - self.b[k]
                beta = dot(self.A[k], y) - 1
                if beta != 0:
                    c = -alpha / beta
                    if 0 < c < s_max:
                        cands.add(Fraction(c))
        return sorted(cands)


def nef_value(P: LatticePolytope):
    """Reciprocal of sup{s > 0 : N(P^(s)) = N(P)}.

    Returns :data:`INFINITY` when the fan changes for every s > 0, which
    happens for some non-simple polytopes.
    """
    _require_full(P)
    s_max = 1 / q_codegree(P)
    tracker = _FanTracker(P)
    prev = Fraction(0)
    for c in tracker.breakpoints(s_max) + [s_max]:
        if not tracker.preserved((prev + c) / 2):
            return INFINITY if prev == 0 else 1 / prev
        if not tracker.preserved(c):
            return 1 / c
        prev = c
    raise RuntimeError("normal fan survived past the emptiness threshold")


def codegree(P: LatticePolytope) -> int:
    """Smallest t >= 1 such that tP has an interior lattice point."""
    _require_full(P)
    n = P.dim
    H = P.hrep
    lo = [min(v[k] for v in P.vertices) for k in range(n)]
    hi = [max(v[k] for v in P.vertices) for k in range(n)]
    for t in range(1, n + 2):
        found = kernels.box_points(H.A, [t * bi for bi in H.b],
                                   [t * x for x in lo], [t * x for x in hi],
                                   strict=True, limit=1)
        if found:
            return t
    raise RuntimeError(f"no interior point in {n + 1}P; codegree bound violated")


def adjunction_profile(P: LatticePolytope) -> AdjunctionProfile:
    mu = q_codegree(P)
    tau = nef_value(P)
    cd = codegree(P)
    n = P.dim
    assert mu <= tau, f"mu={mu} exceeds tau={tau}"
    assert mu <= cd <= n + 1, f"order mu <= cd <= n+1 violated: {mu}, {cd}, {n + 1}"
    return AdjunctionProfile(n, mu, tau, cd, adjoint_polytope(P, 1 / mu))
