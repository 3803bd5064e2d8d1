import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import oracle_partitions
from latpoly.cayley import (
    cayley_config,
    cayley_decompose,
    cayley_sum,
    is_projection_valid,
    max_cayley_length,
    width_one_functionals,
)
from latpoly.polytope import LatticePolytope, RationalPolytope, cube, dilate, minkowski_sum, product_polytope, simplex

POINT = LatticePolytope([()])


def test_cayley_sum_examples(triangle, square):
    C = cayley_sum([simplex(1), dilate(simplex(1), 2)])
    assert set(C.vertices) == {(0, 0), (1, 0), (0, 1), (2, 1)}
    assert C.volume() == 3
    assert len(cayley_sum([triangle, square]).vertices) == 7
    for n in range(1, 5):
        assert cayley_sum([POINT] * (n + 1)) == simplex(n)
    with pytest.raises(ValueError):
        cayley_sum([triangle])
    with pytest.raises(ValueError):
        cayley_sum([triangle, simplex(3)])


def test_middle_slice_is_minkowski_sum(triangle, square):
    # the slice of 2 Cayley(R0, R1) at height 1 is R0 + R1
    C = dilate(cayley_sum([triangle, square]), 2)
    H = C.hrep
    cut = RationalPolytope(list(H.A) + [(0, 0, 1), (0, 0, -1)], list(H.b) + [1, -1])
    verts = sorted(tuple(int(c) for c in v[:2]) for v in cut.vertices)
    S = minkowski_sum(triangle, square)
    assert verts == sorted(S.vertices)
    assert set(S.vertices) == {(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)}


def test_cayley_config_examples():
    assert cayley_config([[(0,), (1,)], [(0,), (1,)]]) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert cayley_config([[()], [()], [()]]) == [(0, 0), (0, 1), (1, 0)]
    A1, A2 = [(0, 0), (1, 0), (0, 1)], [(0, 0), (2, 0), (0, 1), (2, 1)]
    assert LatticePolytope(cayley_config([A1, A2])) == cayley_sum([LatticePolytope(A1), LatticePolytope(A2)])
    with pytest.raises(ValueError):
        cayley_config([[(0,)], [(0, 0)]])


def test_width_one_counts(square, triangle):
    f = width_one_functionals(square)
    assert {(w.linear, w.offset) for w in f} == {((1, 0), 0), ((-1, 0), 1), ((0, 1), 0), ((0, -1), 1)}
    assert len(width_one_functionals(triangle)) == 6
    assert width_one_functionals(simplex(2, 2)) == []


def test_functionals_on_translates(square):
    Q = square.translate((5, -3))
    for w in width_one_functionals(Q):
        assert sorted({w(v) for v in Q.vertices}) == [0, 1]


def test_hirzebruch_decomposition(hirzebruch):
    decs = cayley_decompose(hirzebruch, 1)
    assert len(decs) == 1
    d = decs[0]
    lengths = sorted(R.volume() for R in d.slices)
    assert lengths == [1, 2] and d.slices_normally_equivalent


def test_simplex_decomposes_into_points():
    for n in range(1, 5):
        decs = cayley_decompose(simplex(n), n)
        assert len(decs) == 1
        assert all(len(R.vertices) == 1 for R in decs[0].slices)


def test_no_decomposition_without_width_one():
    assert cayley_decompose(simplex(2, 2), 1) == []
    assert max_cayley_length(simplex(2, 2)) == 1
    with pytest.raises(ValueError):
        cayley_decompose(simplex(2), 3)


def test_max_length(prism):
    for n in range(1, 5):
        assert max_cayley_length(simplex(n)) == n + 1
    assert max_cayley_length(prism) == 3
    assert max_cayley_length(cube(3)) == 2


@pytest.mark.parametrize("P", [cube(2), cube(3), simplex(3), product_polytope(simplex(1), simplex(2)),
                               LatticePolytope([(0, 1), (1, 1), (1, 2), (0, 3)])])
def test_decompositions_are_valid(P):
    for t in range(1, P.dim + 1):
        for d in cayley_decompose(P, t):
            assert is_projection_valid(P, d)
            union = LatticePolytope([v for R in d.slices for v in R.vertices])
            assert union == P


def test_lower_dimensional_input():
    # a unit square placed on a slanted plane in Z^3
    P = LatticePolytope([(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 2)])
    assert len(width_one_functionals(P)) == 4
    decs = cayley_decompose(P, 1)
    assert len(decs) == 2
    for d in decs:
        assert all(sorted({d.image(v)[0] for v in R.vertices}) in ([0], [1]) for R in d.slices)


segments = st.tuples(st.integers(1, 3), st.integers(-2, 2)).map(
    lambda p: dilate(simplex(1), p[0]).translate((p[1],)))


@settings(max_examples=30, deadline=None)
@given(st.lists(segments, min_size=2, max_size=4))
def test_round_trip_recovers_partition(slices):
    C = cayley_sum(slices)
    k = len(slices) - 1
    expected = tuple(sorted(tuple(i for i, v in enumerate(C.vertices) if v[1:] == tail)
                            for tail in {v[1:] for v in C.vertices}))
    partitions = [d.partition for d in cayley_decompose(C, k)]
    assert expected in partitions


@pytest.mark.parametrize("P", [cube(2), simplex(2), cube(3), simplex(3),
                               product_polytope(simplex(1), simplex(2)),
                               LatticePolytope([(0, 0), (2, 0), (1, 1), (0, 1)]),
                               cayley_sum([simplex(1), dilate(simplex(1), 2), dilate(simplex(1), 3)])])
def test_matches_brute_force_oracle(P):
    for t in range(1, P.dim + 1):
        assert {d.partition for d in cayley_decompose(P, t)} == oracle_partitions(P, t)
