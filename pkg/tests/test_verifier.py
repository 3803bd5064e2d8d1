import pytest

from latpoly.cayley import cayley_sum
from latpoly.polytope import LatticePolytope, cube, dilate, simplex
from latpoly.regularity import NotSmoothError
from latpoly.verifier import (
    cayley_lemma_slices,
    check_cayley_lemma,
    fixed_threefolds,
    run_corpus,
    smooth_polygons,
    verify_equivalences,
)

POINT = LatticePolytope([()])


def test_equivalence_examples(prism, triangle):
    r = verify_equivalences(prism)
    assert (r.flag_a, r.flag_b, r.flag_d, r.consistent) == (True, True, True, True)
    assert r.witness.t == 2
    r = verify_equivalences(simplex(2, 2))
    assert (r.flag_a, r.flag_b, r.flag_d, r.consistent) == (False, False, False, True)
    r = verify_equivalences(triangle)
    assert (r.flag_a, r.flag_b, r.flag_d, r.consistent) == (True, True, True, True)


def test_equivalence_rejects_bad_input():
    with pytest.raises(NotSmoothError):
        verify_equivalences(LatticePolytope([(0, 0), (2, 0), (0, 1)]))
    with pytest.raises(ValueError):
        verify_equivalences(LatticePolytope([(0, 0), (1, 1)]))


def test_lemma_examples():
    seg = simplex(1)
    r = check_cayley_lemma([seg, seg, seg])
    assert r.status == "pass" and (r.profile.mu, r.profile.tau, r.profile.cd) == (3, 3, 3)
    r = check_cayley_lemma([dilate(seg, 2), dilate(seg, 3), seg])
    assert r.status == "pass" and r.n == 3 and r.profile.cd == 3
    for n in range(1, 6):
        r = check_cayley_lemma([POINT] * (n + 1))
        assert r.status == "pass" and r.profile.cd == n + 1


def test_lemma_skips_unmet_hypotheses(triangle, square):
    assert check_cayley_lemma([square]).status == "skip"
    assert check_cayley_lemma([triangle, square]).status == "skip"
    # t = 1 with two-dimensional slices: n = 3, so t <= n/2
    r = check_cayley_lemma([square, square])
    assert r.status == "skip" and r.n == 3
    assert check_cayley_lemma([triangle, simplex(3)]).status == "skip"


def test_lemma_on_lower_dimensional_sum():
    # parallel segments in the plane give a non-full-dimensional Cayley sum
    seg = LatticePolytope([(0, 0), (1, 1)])
    r = check_cayley_lemma([seg, seg.translate((0, 1)), dilate(seg, 2)])
    assert r.status == "pass" and r.n == 3


def test_generated_lemma_suite_is_large_enough():
    suite = cayley_lemma_slices()
    assert len(suite) >= 50
    assert all(check_cayley_lemma(s).status == "pass" for s in suite[:10])


def test_empty_corpus():
    rep = run_corpus([])
    assert rep.entries == [] and rep.violations == [] and rep.ok


def test_small_named_corpus(prism, square):
    corpus = [simplex(2, 2), prism, square, simplex(3), cube(3)]
    rep = run_corpus(corpus)
    assert rep.ok, rep.violations
    assert rep.counters["members"] == 5
    assert [e.index for e in rep.entries] == list(range(5))


def test_failures_are_recorded_not_raised():
    thin = LatticePolytope([(0, 0), (2, 0), (0, 1)])
    flat = LatticePolytope([(0, 0, 0), (1, 0, 0)])
    rep = run_corpus([("thin", thin), ("flat", flat)])
    assert rep.entries[0].results["equivalence"] == "skip"
    assert rep.entries[1].results["order"] == "skip"
    assert rep.ok


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_corpus([simplex(2)], checks=("bogus",))


def test_parallel_run_matches_sequential():
    corpus = smooth_polygons(2) + [P for _, P in fixed_threefolds()]
    a = run_corpus(corpus, workers=1)
    b = run_corpus(corpus, workers=2)
    assert [e.results for e in a.entries] == [e.results for e in b.entries]
    assert a.counters == b.counters


def test_polygon_generator_small_grid():
    polys = smooth_polygons(1)
    # inside the unit square: the square and its four unimodular corner triangles
    assert len(polys) == 5
