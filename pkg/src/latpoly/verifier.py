"""Cross-checks between Cayley structure, adjunction invariants and dual defect.

For a smooth full-dimensional lattice polytope P of dimension n the
following are expected to agree:

* ``flag_a``: P is a Cayley sum of length cd(P) = t+1 over Delta_t with
  t > n/2 and normally equivalent slices,
* ``flag_b``: cd(P) >= (n+3)/2 and tau(P) = mu(P),
* ``flag_d``: the signed face-volume sum c_n(J_1) vanishes.

This module evaluates all three on single polytopes, checks the Cayley
sum identity tau = mu = cd = t+1, and runs both over corpora.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence

from latpoly.adjunction import AdjunctionProfile, adjunction_profile
from latpoly.cayley import CayleyDecomposition, cayley_decompose, cayley_sum
from latpoly.defect import dual_defect, jet1_chern_degree
from latpoly.polytope import (
    LatticePolytope,
    cube,
    dilate,
    full_dimensional_copy,
    normally_equivalent,
    product_polytope,
    simplex,
)
from latpoly.regularity import NotSmoothError, is_smooth

CHECKS = ("equivalence", "nonnegativity", "order", "roundtrip")

PASS, FAIL, SKIP, ERROR = "pass", "fail", "skip", "error"


@dataclass(frozen=True)
class EquivalenceReport:
    flag_a: bool
    flag_b: bool
    flag_d: bool
    consistent: bool
    profile: AdjunctionProfile
    chern_sum: int
    witness: Optional[CayleyDecomposition] = None


def verify_equivalences(P: LatticePolytope, profile: Optional[AdjunctionProfile] = None) -> EquivalenceReport:
    """Evaluate the three structural flags on a smooth full-dimensional P.

    Raises:
        NotSmoothError: if P is not smooth.
        ValueError: if P is not full-dimensional.
    """
    if not P.is_full_dimensional:
        raise ValueError("equivalence check needs a full-dimensional polytope")
    if not is_smooth(P):
        raise NotSmoothError("equivalence check needs a smooth polytope")
    n = P.dim
    prof = profile or adjunction_profile(P)
    chern = jet1_chern_degree(P)
    t = prof.cd - 1
    witness = None
    if 2 * t > n:
        witness = next((d for d in cayley_decompose(P, t) if d.slices_normally_equivalent), None)
    flag_a = witness is not None
    flag_b = 2 * prof.cd >= n + 3 and prof.tau == prof.mu
    flag_d = chern == 0
    return EquivalenceReport(
        flag_a=flag_a,
        flag_b=flag_b,
        flag_d=flag_d,
        consistent=flag_a == flag_b == flag_d,
        profile=prof,
        chern_sum=chern,
        witness=witness,
    )


@dataclass(frozen=True)
class LemmaReport:
    status: str
    t: int
    n: Optional[int] = None
    profile: Optional[AdjunctionProfile] = None
    reason: str = ""


def check_cayley_lemma(slices: Sequence[LatticePolytope]) -> LemmaReport:
    """Build the Cayley sum of normally equivalent slices and test tau = mu = cd = t+1.

    Unmet hypotheses give a ``skip`` report rather than a failure.
    """
    t = len(slices) - 1
    if t < 1:
        return LemmaReport(SKIP, t, reason="need at least two slices")
    if len({R.ambient_dim for R in slices}) != 1:
        return LemmaReport(SKIP, t, reason="slices live in different ambient dimensions")
    if not all(normally_equivalent(slices[0], R) for R in slices[1:]):
        return LemmaReport(SKIP, t, reason="slices are not normally equivalent")
    P = full_dimensional_copy(cayley_sum(slices))
    n = P.dim
    if 2 * t <= n:
        return LemmaReport(SKIP, t, n, reason=f"t = {t} does not exceed n/2 = {Fraction(n, 2)}")
    prof = adjunction_profile(P)
    ok = prof.mu == prof.tau == prof.cd == t + 1
    reason = "" if ok else f"mu={prof.mu}, tau={prof.tau}, cd={prof.cd}, expected {t + 1}"
    return LemmaReport(PASS if ok else FAIL, t, n, prof, reason)


# ---------------------------------------------------------------------------
# corpus runs


@dataclass
class CorpusEntry:
    index: int
    name: str
    dim: int
    smooth: bool
    results: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    report: Optional[EquivalenceReport] = None


@dataclass
class CorpusReport:
    entries: list = field(default_factory=list)
    counters: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_order(P, prof):
    n = P.dim
    if not (prof.mu <= prof.tau and prof.mu <= prof.cd <= n + 1):
        return FAIL, f"mu={prof.mu}, tau={prof.tau}, cd={prof.cd}, n+1={n + 1}"
    return PASS, ""


def _check_nonnegativity(P):
    rep = dual_defect(P)
    if rep.chern_sum < 0:
        return FAIL, f"negative chern sum {rep.chern_sum}"
    if rep.defective != (rep.codim is None or rep.codim > 1):
        return FAIL, f"defect flag disagrees with codim {rep.codim}"
    return PASS, ""


def _check_roundtrip(P):
    from latpoly.documents import dump_polytope, parse_polytope

    Q = parse_polytope(dump_polytope(P))
    if Q != P:
        return FAIL, "document round trip changed the vertex set"
    if P.dim >= 1 and P.is_full_dimensional:
        for t in range(1, P.dim + 1):
            for dec in cayley_decompose(P, t):
                union = LatticePolytope([v for R in dec.slices for v in R.vertices])
                if union != P:
                    return FAIL, f"slices of {dec.partition} do not hull back to P"
    return PASS, ""


def _evaluate(args) -> CorpusEntry:
    index, name, vertices, checks = args
    P = LatticePolytope(vertices)
    smooth = P.dim >= 1 and is_smooth(P)
    entry = CorpusEntry(index, name, P.dim, smooth)
    full = P.is_full_dimensional and P.dim >= 1
    prof = None

    def run(check, fn):
        try:
            status, detail = fn()
        except Exception as exc:  # recorded, never propagated
            status, detail = ERROR, f"{type(exc).__name__}: {exc}"
        entry.results[check] = status
        if detail:
            entry.details[check] = detail

    if full and ({"order", "equivalence"} & set(checks)):
        try:
            prof = adjunction_profile(P)
        except Exception as exc:
            entry.results["profile"] = ERROR
            entry.details["profile"] = f"{type(exc).__name__}: {exc}"

    for check in checks:
        if check == "order":
            if prof is None:
                entry.results[check] = SKIP
            else:
                run(check, lambda: _check_order(P, prof))
        elif check == "equivalence":
            if not (full and smooth and prof is not None):
                entry.results[check] = SKIP
                continue

            def eq():
                entry.report = verify_equivalences(P, prof)
                r = entry.report
                if r.consistent:
                    return PASS, ""
                return FAIL, f"flags a={r.flag_a} b={r.flag_b} d={r.flag_d}"

            run(check, eq)
        elif check == "nonnegativity":
            if not (full and smooth):
                entry.results[check] = SKIP
            else:
                run(check, lambda: _check_nonnegativity(P))
        elif check == "roundtrip":
            run(check, lambda: _check_roundtrip(P))
        else:
            raise ValueError(f"unknown check {check!r}")
    return entry


def _normalize(corpus):
    for i, item in enumerate(corpus):
        if isinstance(item, LatticePolytope):
            yield i, f"#{i}", item
        else:
            name, P = item
            yield i, name, P


def run_corpus(corpus: Iterable, checks: Sequence[str] = CHECKS, workers: int = 1) -> CorpusReport:
    """Apply the selected checks to every member, in input order.

    Members may be polytopes or ``(name, polytope)`` pairs. Failures and
    exceptions are recorded per member and never abort the run.
    """
    checks = tuple(checks)
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise ValueError(f"unknown checks: {', '.join(bad)}")
    jobs = [(i, name, P.vertices, checks) for i, name, P in _normalize(corpus)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_evaluate, jobs, chunksize=4))
    else:
        entries = [_evaluate(j) for j in jobs]
    report = CorpusReport(entries=entries)
    for e in entries:
        report.counters["members"] += 1
        report.counters["smooth"] += e.smooth
        for check, status in e.results.items():
            report.counters[f"{check}:{status}"] += 1
            if status in (FAIL, ERROR):
                report.violations.append((e.index, e.name, check, e.details.get(check, "")))
    return report


# ---------------------------------------------------------------------------
# corpus generators


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _prim(v):
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def _smooth_corner(prev, v, nxt):
    a = _prim((prev[0] - v[0], prev[1] - v[1]))
    b = _prim((nxt[0] - v[0], nxt[1] - v[1]))
    return abs(a[0] * b[1] - a[1] * b[0]) == 1


def smooth_polygons(size: int = 4) -> list:
    """Every smooth lattice polygon with vertices in [0, size]^2.

    Polygons are grown counterclockwise from their lowest-then-leftmost
    vertex with candidates sorted by angle around it, pruning any corner
    that is not a strict left turn or not unimodular.
    """
    grid = [(x, y) for y in range(size + 1) for x in range(size + 1)]
    found = []
    for v0 in grid:
        cand = [p for p in grid if (p[1], p[0]) > (v0[1], v0[0])]
        # angular order around v0; all candidates lie in a half-plane
        cand.sort(key=cmp_to_key(lambda p, q: -_cross(v0, p, q)
                                 or abs(p[0] - v0[0]) + abs(p[1] - v0[1])
                                 - abs(q[0] - v0[0]) - abs(q[1] - v0[1])))
        _grow(v0, cand, [v0], 0, found)
    return sorted((LatticePolytope(poly) for poly in found), key=lambda P: P.vertices)


def _grow(v0, cand, chain, start, found):
    k = len(chain)
    if k >= 3:
        prev, last = chain[-2], chain[-1]
        if (_cross(prev, last, v0) > 0 and _smooth_corner(prev, last, v0)
                and _smooth_corner(last, v0, chain[1])):
            found.append(tuple(chain))
    for j in range(start, len(cand)):
        p = cand[j]
        if k >= 2:
            prev, last = chain[-2], chain[-1]
            if _cross(prev, last, p) <= 0 or not _smooth_corner(prev, last, p):
                continue
        if _cross(v0, chain[-1], p) <= 0 and k >= 2:
            continue
        chain.append(p)
        _grow(v0, cand, chain, j + 1, found)
        chain.pop()


def fixed_threefolds() -> list:
    """Named smooth 3-polytopes, including Cayley builds with product slices."""
    seg = simplex(1)
    sq = cube(2)
    return [
        ("simplex3", simplex(3)),
        ("cube", cube(3)),
        ("segment x triangle", product_polytope(seg, simplex(2))),
        ("cayley(seg, seg, seg)", cayley_sum([seg, seg, seg])),
        ("cayley(square, square)", cayley_sum([sq, sq])),
        ("cayley(seg, 2seg, 3seg)", cayley_sum([seg, dilate(seg, 2), dilate(seg, 3)])),
        ("2 simplex3", simplex(3, 2)),
    ]


def cayley_lemma_slices(limit: Optional[int] = None) -> list:
    """Slice lists of dilated and translated copies of a common base.

    Bases are a segment (with t = 2, 3) and the triangle and square (with
    t = 3), so that t > n/2 always holds for the resulting Cayley sum.
    """
    seg = simplex(1)
    out = []
    for t in (2, 3):
        for scales in product((1, 2, 3), repeat=t + 1):
            if t == 3 and len(set(scales)) < 3:
                continue
            shifts = [(sum(scales[: i + 1]) % 3 - 1,) for i in range(t + 1)]
            out.append([dilate(seg, s).translate(u) for s, u in zip(scales, shifts)])
    for base in (simplex(2), cube(2)):
        for scales in product((1, 2), repeat=4):
            shifts = [(i % 2, -(i // 2)) for i in range(4)]
            out.append([dilate(base, s).translate(u) for s, u in zip(scales, shifts)])
    return out[:limit] if limit else out


__all__ = [
    "CHECKS",
    "CorpusEntry",
    "CorpusReport",
    "EquivalenceReport",
    "LemmaReport",
    "cayley_lemma_slices",
    "check_cayley_lemma",
    "fixed_threefolds",
    "run_corpus",
    "smooth_polygons",
    "verify_equivalences",
]
