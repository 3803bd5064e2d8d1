import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latpoly import _pykernels, kernels
from latpoly.linalg import det as bareiss_det

try:
    from latpoly import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

coef = st.integers(-5, 5)


def systems(n_max=3, m_max=5):
    return st.integers(1, n_max).flatmap(lambda n: st.tuples(
        st.lists(st.lists(coef, min_size=n, max_size=n), min_size=1, max_size=m_max),
        st.lists(st.integers(-8, 8), min_size=m_max, max_size=m_max),
        st.lists(st.integers(-3, 0), min_size=n, max_size=n),
        st.lists(st.integers(0, 3), min_size=n, max_size=n),
    ))


def _brute(A, b, lo, hi):
    from itertools import product
    return [x for x in product(*(range(l, h + 1) for l, h in zip(lo, hi)))
            if all(sum(a * c for a, c in zip(row, x)) >= bi for row, bi in zip(A, b))]


@settings(max_examples=200, deadline=None)
@given(systems())
def test_python_box_points_matches_brute_force(sys_):
    A, b, lo, hi = sys_
    b = b[:len(A)]
    assert _pykernels.box_points(A, b, lo, hi) == _brute(A, b, lo, hi)


@needs_c
@settings(max_examples=200, deadline=None)
@given(systems())
def test_backends_agree_on_box_points(sys_):
    A, b, lo, hi = sys_
    b = b[:len(A)]
    assert _ckernels.box_points(A, b, lo, hi, 0) == _pykernels.box_points(A, b, lo, hi)
    assert _ckernels.box_points(A, b, lo, hi, 2) == _pykernels.box_points(A, b, lo, hi, 2)


@needs_c
@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(coef, min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
def test_backends_agree_on_det(M):
    assert _ckernels.det(M) == _pykernels.det(M) == bareiss_det(M)


@needs_c
@settings(max_examples=100, deadline=None)
@given(systems(), st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=6))
def test_backends_agree_on_tight_sets(sys_, pts):
    A, b, _, _ = sys_
    b = b[:len(A)]
    n = len(A[0])
    pts = [p[:n] for p in pts]
    assert _ckernels.tight_sets(A, b, pts) == _pykernels.tight_sets(A, b, pts)


def test_large_values_fall_back_to_python():
    big = 1 << 70
    assert kernels.det([[big, 1], [0, big]]) == big * big
    pts = kernels.box_points([[1]], [big], [big], [big + 2])
    assert pts == [(big,), (big + 1,), (big + 2,)]


def test_strict_mode_and_limit():
    # 0 < x < 3 on [-5, 5]
    A, b = [[1], [-1]], [0, -3]
    assert kernels.box_points(A, b, [-5], [5], strict=True) == [(1,), (2,)]
    assert kernels.box_points(A, b, [-5], [5], strict=True, limit=1) == [(1,)]


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_environment_forces_python_backend():
    import os
    import subprocess
    import sys

    code = ("from latpoly import kernels, jet1_chern_degree, simplex;"
            "print(kernels.BACKEND, jet1_chern_degree(simplex(2, 2)))")
    env = dict(os.environ, LATPOLY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "3"]
