from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from latpoly.polytope import (
    LatticePolytope,
    RationalPolytope,
    convex_hull,
    cube,
    dilate,
    face_lattice,
    lattice_points,
    minkowski_sum,
    normal_fan,
    normalized_volume,
    normally_equivalent,
    simplex,
)

point_sets = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(-2, 2)] * n), min_size=1, max_size=8))


def test_hull_examples(square):
    P, H = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(P.vertices) == 4 and len(H.A) == 4
    P, _ = convex_hull([(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)])
    assert set(P.vertices) == {(0, 0), (2, 0), (0, 2)}
    P, H = convex_hull([(0, 0), (1, 0), (2, 0)])
    assert P.dim == 1 and set(P.vertices) == {(0, 0), (2, 0)}
    assert len(H.E) == 1
    with pytest.raises(ValueError):
        convex_hull([])


@settings(max_examples=120, deadline=None)
@given(point_sets)
def test_hull_contains_input_and_round_trips(pts):
    P, H = convex_hull(pts)
    for p in pts:
        assert H.contains(p)
    assert LatticePolytope(P.vertices) == P
    for a in H.A:
        assert any(a)
    # every vertex meets at least dim facets with equality
    for v in P.vertices:
        tight = sum(1 for a, b in zip(H.A, H.b) if sum(x * y for x, y in zip(a, v)) == b)
        assert tight >= P.dim


def _faces_by_functionals(P, bound=3):
    """Vertex sets minimizing some integer functional, plus P itself."""
    n = P.ambient_dim
    faces = set()
    for c in product(range(-bound, bound + 1), repeat=n):
        vals = [sum(a * b for a, b in zip(c, v)) for v in P.vertices]
        m = min(vals)
        faces.add(frozenset(i for i, x in enumerate(vals) if x == m))
    return faces


def test_face_counts(square, prism):
    assert face_lattice(square).f_vector == (4, 4, 1)
    assert face_lattice(prism).f_vector == (6, 9, 5, 1)
    assert face_lattice(simplex(3)).f_vector == (4, 6, 4, 1)
    found = {frozenset(F.vertex_indices) for F in face_lattice(prism)}
    assert found == _faces_by_functionals(prism)


@settings(max_examples=80, deadline=None)
@given(point_sets)
def test_euler_relation(pts):
    P = LatticePolytope(pts)
    f = face_lattice(P).f_vector
    assert sum((-1) ** d * c for d, c in enumerate(f)) == 1


def test_volume_examples(square):
    assert normalized_volume(simplex(1)) == 1
    assert normalized_volume(simplex(2, 2)) == 4
    assert normalized_volume(square) == 2
    assert normalized_volume(cube(3)) == 6
    # a segment of lattice length 3 in Z^2
    assert normalized_volume(LatticePolytope([(0, 0), (3, 3)])) == 3


@settings(max_examples=60, deadline=None)
@given(point_sets, st.integers(1, 3))
def test_volume_scales_with_dilation(pts, t):
    P = LatticePolytope(pts)
    assert normalized_volume(dilate(P, t)) == t ** P.dim * normalized_volume(P)


def test_face_volumes_live_in_span_lattice():
    P = LatticePolytope([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    fl = face_lattice(P)
    # the slanted facet is 2 * (unimodular triangle) in its own lattice
    slanted = next(F for F in fl.by_dim[2] if all(sum(v) == 2 for v in F.vertices))
    assert fl.volume(slanted) == 4


def test_lattice_point_examples(square, triangle):
    assert lattice_points(triangle, interior=True) == []
    assert lattice_points(simplex(2, 3), interior=True) == [(1, 1)]
    assert len(lattice_points(square)) == 4


def _finite_difference(values, order):
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


@settings(max_examples=30, deadline=None)
@given(point_sets)
def test_ehrhart_counts_are_polynomial(pts):
    P = LatticePolytope(pts)
    d = P.dim
    # counts at t = 0..d+2 must fit a polynomial of degree d
    counts = [1] + [len(lattice_points(dilate(P, t))) for t in range(1, d + 3)]
    assert set(_finite_difference(counts, d + 1)) == {0}


def test_dilate_examples(triangle, square):
    assert dilate(triangle, 1) == triangle
    assert set(dilate(triangle, 2).vertices) == {(0, 0), (2, 0), (0, 2)}
    assert dilate(square, 3) == cube(2, 3)
    with pytest.raises(ValueError):
        dilate(square, 0)


def test_minkowski_examples(triangle, square):
    S = minkowski_sum(triangle, square)
    assert set(S.vertices) == {(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)}
    assert minkowski_sum(square, LatticePolytope([(3, -1)])) == square.translate((3, -1))
    assert minkowski_sum(triangle, triangle) == dilate(triangle, 2)
    with pytest.raises(ValueError):
        minkowski_sum(triangle, simplex(3))


@settings(max_examples=50, deadline=None)
@given(point_sets, point_sets)
def test_minkowski_commutes(p, q):
    assume(len(p[0]) == len(q[0]))
    P, Q = LatticePolytope(p), LatticePolytope(q)
    S = minkowski_sum(P, Q)
    assert S == minkowski_sum(Q, P)
    assert len(S.vertices) <= len(P.vertices) * len(Q.vertices)


def test_normal_fans(square, triangle):
    assert len(normal_fan(square)) == 4
    assert all(len(c) == 2 for c in normal_fan(square).cones)
    assert len(normal_fan(triangle)) == 3
    assert normal_fan(simplex(2, 2)) == normal_fan(triangle)
    assert normally_equivalent(square, LatticePolytope([(0, 0), (2, 0), (0, 1), (2, 1)]))
    assert not normally_equivalent(square, triangle)
    assert normally_equivalent(simplex(1), simplex(1, 2))
    with pytest.raises(ValueError):
        normally_equivalent(square, simplex(3))


def test_rational_polytope_vertices_and_fan(triangle):
    R = RationalPolytope(triangle.hrep.A, [b + Fraction(1, 4) for b in triangle.hrep.b])
    assert R.vertices == ((Fraction(1, 4), Fraction(1, 4)), (Fraction(1, 4), Fraction(1, 2)),
                          (Fraction(1, 2), Fraction(1, 4)))
    assert R.normal_fan() == RationalPolytope(triangle.hrep.A, triangle.hrep.b).normal_fan()
    empty = RationalPolytope(triangle.hrep.A, [b + 1 for b in triangle.hrep.b])
    assert empty.is_empty
