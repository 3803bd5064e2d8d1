"""Command-line front end.

Every subcommand reads polytope documents (JSON, ``-`` for stdin) and emits
either an aligned human-readable report or a JSON document with exact
values (integers and ``"p/q"`` strings).

Exit status: 0 on success, 1 when a check reports a violation, 2 on
malformed input or usage errors.
"""

import argparse
import json
import sys
import warnings
from fractions import Fraction

from latpoly.adjunction import INFINITY, adjoint_polytope, adjunction_profile
from latpoly.cayley import cayley_decompose, cayley_sum
from latpoly.defect import SingularInputWarning, dual_defect
from latpoly.documents import (
    DocumentError,
    as_lattice_polytope,
    format_rational,
    parse_polytope,
    parse_rational,
    polytope_document,
)
from latpoly.polytope import LatticePolytope
from latpoly.regularity import NotSmoothError, regularity
from latpoly.verifier import CHECKS, fixed_threefolds, run_corpus, smooth_polygons, verify_equivalences


class InputError(Exception):
    """Problem with the user's input; reported with exit status 2."""


# ---------------------------------------------------------------------------
# rendering


def _exact(value):
    """Recursively convert values to JSON-safe exact forms."""
    if value is INFINITY:
        return "inf"
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): _exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    if isinstance(value, LatticePolytope):
        return [list(v) for v in value.vertices]
    raise TypeError(f"cannot render {type(value).__name__}")


def _human(value) -> str:
    value = _exact(value)
    if isinstance(value, list):
        return " ".join(_human(v) if not isinstance(v, list) else "(" + ",".join(map(str, v)) + ")"
                        for v in value) or "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_human(v)}" for k, v in value.items())
    if isinstance(value, bool):
        return "yes" if value else "no"
    return "-" if value is None else str(value)


def emit(report: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "machine":
        out.write(json.dumps(_exact(report), separators=(",", ":")) + "\n")
        return
    width = max((len(k) for k in report), default=0)
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  - {_human(item)}\n")
        else:
            out.write(f"{key.ljust(width)}  {_human(value)}\n")


# ---------------------------------------------------------------------------
# input


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> LatticePolytope:
    try:
        return as_lattice_polytope(parse_polytope(_read(path)))
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_full(path: str) -> LatticePolytope:
    P = _load(path)
    if not P.is_full_dimensional:
        raise InputError(f"{path}: polytope has dimension {P.dim} in Z^{P.ambient_dim}; "
                         "this command needs a full-dimensional polytope")
    return P


# ---------------------------------------------------------------------------
# subcommands


def cmd_hull(args):
    P = _load(args.file)
    H = P.hrep
    return {
        "dim": P.dim,
        "ambient_dim": P.ambient_dim,
        "vertices": list(P.vertices),
        "facets": [{"normal": list(a), "rhs": b} for a, b in zip(H.A, H.b)],
        "equations": [{"normal": list(a), "rhs": e} for a, e in zip(H.E, H.e)],
    }, 0


def cmd_faces(args):
    P = _load(args.file)
    fl = P.face_lattice
    faces = [{"dim": F.dim, "vertices": list(F.vertex_indices), "volume": fl.volumes[F.vertex_indices]}
             for F in sorted(fl, key=lambda F: (F.dim, sorted(F.vertex_indices)))]
    return {"f_vector": list(fl.f_vector), "faces": faces}, 0


def cmd_volume(args):
    P = _load(args.file)
    return {"dim": P.dim, "normalized_volume": P.volume()}, 0


def cmd_regularity(args):
    P = _load(args.file)
    r = regularity(P)
    return {
        "simple": r.simple,
        "smooth": r.smooth,
        "min_edge_length": r.min_edge_length,
        "offending_vertex": None if r.offending_vertex is None else list(P.vertices[r.offending_vertex]),
    }, 0


def cmd_defect(args):
    P = _load(args.file)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SingularInputWarning)
        rep = dual_defect(P)
    out = {
        "chern_sum": rep.chern_sum,
        "delta": rep.delta,
        "codim": rep.codim,
        "degree": rep.degree,
        "defective": rep.defective,
        "degenerate_embedding": rep.degenerate_embedding,
    }
    if caught:
        out["warning"] = str(caught[0].message)
    return out, 0


def cmd_adjunction(args):
    P = _load_full(args.file)
    prof = adjunction_profile(P)
    out = {
        "dim": prof.dim,
        "mu": prof.mu,
        "tau": prof.tau,
        "cd": prof.cd,
        "core": list(prof.core.vertices),
    }
    if args.s is not None:
        s = parse_rational(args.s, "--s")
        if s < 0:
            raise InputError("--s must be nonnegative")
        Q = adjoint_polytope(P, s)
        out["s"] = s
        out["adjoint_vertices"] = list(Q.vertices)
        out["adjoint_dim"] = -1 if Q.is_empty else Q.dim
    return out, 0


def cmd_cayley_build(args):
    slices = [_load(p) for p in args.files]
    try:
        C = cayley_sum(slices)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return polytope_document(C, args.name), 0


def _decomposition_report(d):
    return {
        "t": d.t,
        "partition": [list(b) for b in d.partition],
        "projection": [list(r) for r in d.projection],
        "offset": list(d.offset),
        "slices": [list(R.vertices) for R in d.slices],
        "normally_equivalent": d.slices_normally_equivalent,
    }


def cmd_cayley_detect(args):
    P = _load(args.file)
    ts = [args.t] if args.t is not None else range(1, P.dim + 1)
    decs = []
    for t in ts:
        try:
            decs += cayley_decompose(P, t)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return {"count": len(decs), "decompositions": [_decomposition_report(d) for d in decs]}, 0


def cmd_verify(args):
    P = _load_full(args.file)
    try:
        r = verify_equivalences(P)
    except NotSmoothError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    out = {
        "cayley_flag": r.flag_a,
        "invariant_flag": r.flag_b,
        "defect_flag": r.flag_d,
        "consistent": r.consistent,
        "chern_sum": r.chern_sum,
        "mu": r.profile.mu,
        "tau": r.profile.tau,
        "cd": r.profile.cd,
    }
    if r.witness is not None:
        out["witness"] = [_decomposition_report(r.witness)]
    return out, 0 if r.consistent else 1


def _corpus_members(args):
    if args.builtin == "polygons":
        for i, P in enumerate(smooth_polygons(args.size)):
            yield f"polygon-{i}", P
        return
    if args.builtin == "threefolds":
        yield from fixed_threefolds()
        return
    if args.file is None:
        raise InputError("corpus needs a FILE or --builtin")
    text = _read(args.file)
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = parse_polytope(line)
            name = json.loads(line).get("name", f"line-{lineno}")
            yield name, as_lattice_polytope(obj)
        except DocumentError as exc:
            raise InputError(f"{args.file}:{lineno}: {exc}") from None


def cmd_corpus(args):
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise InputError(f"unknown checks {', '.join(bad)}; choose from {', '.join(CHECKS)}")
    batch, total, violations = [], 0, []
    counters = {}

    def flush():
        nonlocal total
        rep = run_corpus(batch, checks, workers=args.workers)
        for e in rep.entries:
            line = {"index": total + e.index, "name": e.name, "dim": e.dim, "smooth": e.smooth,
                    "results": e.results}
            if e.details:
                line["details"] = e.details
            emit(line, args.format) if args.format == "machine" else print(
                f"{total + e.index:>6}  {e.name:<28} " + " ".join(f"{k}={v}" for k, v in e.results.items()))
        for k, v in rep.counters.items():
            counters[k] = counters.get(k, 0) + v
        violations.extend((total + i, n, c, d) for i, n, c, d in rep.violations)
        total += len(batch)
        batch.clear()

    for member in _corpus_members(args):
        batch.append(member)
        if len(batch) >= max(64, 16 * args.workers):
            flush()
    if batch:
        flush()
    summary = {"members": total, "counters": dict(sorted(counters.items())),
               "violations": [{"index": i, "name": n, "check": c, "detail": d} for i, n, c, d in violations]}
    return summary, 1 if violations else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latpoly", description="Exact lattice polytope toolkit.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "machine"), default="human",
                     help="output style (default: human)")
    sub = parser.add_subparsers(dest="command", required=True)

    def single(name, func, help_):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("file", help="polytope document, or - for stdin")
        p.set_defaults(func=func)
        return p

    single("hull", cmd_hull, "vertices and facet description")
    single("faces", cmd_faces, "face lattice with normalized volumes")
    single("volume", cmd_volume, "normalized lattice volume")
    single("regularity", cmd_regularity, "simplicity, smoothness and edge lengths")
    single("defect", cmd_defect, "Chern sum and dual-defect data")
    p = single("adjunction", cmd_adjunction, "mu, tau, codegree and core")
    p.add_argument("--s", help="also report the adjoint polytope at this p/q")
    single("verify", cmd_verify, "evaluate the three structural flags on a smooth polytope")

    cay = sub.add_parser("cayley", help="build or detect Cayley sums")
    csub = cay.add_subparsers(dest="action", required=True)
    b = csub.add_parser("build", parents=[fmt], help="Cayley sum of slice documents")
    b.add_argument("files", nargs="+", help="slice documents (at least two)")
    b.add_argument("--name", help="name stored in the output document")
    b.set_defaults(func=cmd_cayley_build)
    d = csub.add_parser("detect", parents=[fmt], help="decompositions onto unimodular simplices")
    d.add_argument("file")
    d.add_argument("--t", type=int, help="simplex dimension (default: every t)")
    d.set_defaults(func=cmd_cayley_detect)

    c = sub.add_parser("corpus", parents=[fmt], help="run checks over line-delimited documents")
    c.add_argument("file", nargs="?", help="one document per line, or - for stdin")
    c.add_argument("--builtin", choices=("polygons", "threefolds"), help="use a generated corpus")
    c.add_argument("--size", type=int, default=4, help="grid size for --builtin polygons")
    c.add_argument("--checks", default=",".join(CHECKS), help="comma-separated subset of " + ",".join(CHECKS))
    c.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    c.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = args.func(args)
    except InputError as exc:
        print(f"latpoly: error: {exc}", file=sys.stderr)
        return 2
    emit(report, args.format)
    return status


if __name__ == "__main__":
    sys.exit(main())
