from fractions import Fraction
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from latpoly import lp
from latpoly.linalg import solve_exact


def _best_vertex(c, A, b):
    """Optimum over all basic feasible points, or None if none is feasible."""
    n = len(c)
    rows = [list(r) for r in A] + [[-int(i == j) for j in range(n)] for i in range(n)]
    rhs = list(b) + [0] * n
    best = None
    for S in combinations(range(len(rows)), n):
        x = solve_exact([rows[i] for i in S], [rhs[i] for i in S])
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(r, x)) <= h for r, h in zip(rows, rhs)):
            val = sum(a * v for a, v in zip(c, x))
            best = val if best is None else max(best, val)
    return best


def test_textbook_examples():
    r = lp.maximize([3, 2], [[1, 1], [1, 3], [1, -1]], [4, 6, 2])
    assert r.status == lp.OPTIMAL and r.value == 11 and r.x == (3, 1)
    # phase one needed: x + y >= 2
    r = lp.maximize([-1, -2], [[-1, -1], [1, 0]], [-2, 5])
    assert r.status == lp.OPTIMAL and r.value == -2
    assert lp.maximize([1], [[1], [-1]], [1, -2]).status == lp.INFEASIBLE
    assert lp.maximize([1, 1], [[1, -1]], [1]).status == lp.UNBOUNDED


def test_degenerate_problem_terminates():
    # classic cycling example under the textbook rule
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9],
         [Fraction(1, 2), -90, Fraction(-1, 50), 3],
         [0, 0, 1, 0]]
    r = lp.maximize([Fraction(3, 4), -150, Fraction(1, 50), -6], A, [0, 0, 1])
    assert r.status == lp.OPTIMAL and r.value == Fraction(1, 20)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(st.integers(-3, 3), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=4),
    st.lists(st.integers(-4, 6), min_size=4, max_size=4))))
def test_matches_vertex_enumeration(data):
    c, A, b = data
    b = b[:len(A)]
    # a box keeps the problem bounded so every optimum sits at a vertex
    n = len(c)
    A = A + [[int(i == j) for j in range(n)] for i in range(n)]
    b = b + [5] * n
    r = lp.maximize(c, A, b)
    best = _best_vertex(c, A, b)
    if best is None:
        assert r.status == lp.INFEASIBLE
    else:
        assert r.status == lp.OPTIMAL and r.value == best
        assert all(sum(a * v for a, v in zip(row, r.x)) <= h for row, h in zip(A, b))
