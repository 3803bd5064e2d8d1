"""JSON polytope documents with exact numerals.

A document is a JSON object with ``ambient_dim``, an optional ``name`` and
exactly one of

* ``"vertices"``: a list of integer points, or
* ``"inequalities"``: ``{"A": [[...], ...], "b": [...]}`` meaning A x >= b,
  where entries of ``b`` may be integers or ``"p/q"`` strings.

Rationals are always written as canonical ``"p/q"`` strings and integers as
JSON integers, so no floating-point value is ever produced or accepted.
"""

import json
import re
from fractions import Fraction
from typing import Union

from latpoly.polytope import HRep, LatticePolytope, RationalPolytope

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class DocumentError(ValueError):
    """Malformed polytope document; ``where`` locates the offending item."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def format_rational(x) -> Union[int, str]:
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value, where: str = "") -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"expected a number, got {value!r}", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            num, den = m.groups()
            if den is not None and int(den) == 0:
                raise DocumentError("zero denominator", where)
            return Fraction(int(num), int(den or 1))
    raise DocumentError(f"malformed rational {value!r} (use an integer or 'p/q')", where)


def parse_integer(value, where: str = "") -> int:
    q = parse_rational(value, where)
    if q.denominator != 1:
        raise DocumentError(f"lattice coordinates must be integers, got {value!r}", where)
    return q.numerator


def _vector(raw, n, where, parse):
    if not isinstance(raw, list):
        raise DocumentError("expected a list", where)
    if len(raw) != n:
        raise DocumentError(f"expected {n} entries, got {len(raw)}", where)
    return tuple(parse(v, f"{where}[{k}]") for k, v in enumerate(raw))


def load_document(text: str) -> dict:
    """Decode one JSON document, reporting line and column on syntax errors."""
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc


def _reject_float(s):
    raise DocumentError(f"floating-point numeral {s} is not allowed")


def parse_polytope(document: Union[str, dict]) -> Union[LatticePolytope, HRep]:
    """Parse a document into a LatticePolytope (vertices) or an HRep (inequalities).

    Raises:
        DocumentError: for malformed numerals, missing fields or mixed
            representations. The message names the offending path.
    """
    doc = load_document(document) if isinstance(document, str) else document
    if "ambient_dim" not in doc:
        raise DocumentError("missing field", "ambient_dim")
    n = doc["ambient_dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DocumentError(f"expected a nonnegative integer, got {n!r}", "ambient_dim")
    has_v, has_h = "vertices" in doc, "inequalities" in doc
    if has_v and has_h:
        raise DocumentError("give either 'vertices' or 'inequalities', not both")
    if not (has_v or has_h):
        raise DocumentError("missing field 'vertices' or 'inequalities'")
    if has_v:
        raw = doc["vertices"]
        if not isinstance(raw, list) or not raw:
            raise DocumentError("expected a nonempty list of points", "vertices")
        pts = [_vector(p, n, f"vertices[{i}]", parse_integer) for i, p in enumerate(raw)]
        return LatticePolytope(pts)
    ineq = doc["inequalities"]
    if not isinstance(ineq, dict) or "A" not in ineq or "b" not in ineq:
        raise DocumentError("expected an object with 'A' and 'b'", "inequalities")
    A, b = ineq["A"], ineq["b"]
    if not isinstance(A, list) or not isinstance(b, list):
        raise DocumentError("'A' and 'b' must be lists", "inequalities")
    if len(A) != len(b):
        raise DocumentError(f"{len(A)} rows but {len(b)} right-hand sides", "inequalities")
    rows = tuple(_vector(r, n, f"inequalities.A[{i}]", parse_integer) for i, r in enumerate(A))
    rhs = tuple(parse_rational(v, f"inequalities.b[{i}]") for i, v in enumerate(b))
    return HRep(rows, rhs)


def as_lattice_polytope(obj: Union[LatticePolytope, HRep]) -> LatticePolytope:
    """Turn a parsed document into a lattice polytope, solving inequalities if needed."""
    if isinstance(obj, LatticePolytope):
        return obj
    R = RationalPolytope(obj.A, obj.b)
    if R.is_empty:
        raise DocumentError("inequalities define the empty set", "inequalities")
    bad = [v for v in R.vertices if any(c.denominator != 1 for c in v)]
    if bad:
        shown = "(" + ", ".join(str(format_rational(c)) for c in bad[0]) + ")"
        raise DocumentError(f"vertex {shown} is not a lattice point", "inequalities")
    return LatticePolytope([tuple(int(c) for c in v) for v in R.vertices])


def polytope_document(P: LatticePolytope, name: str = None) -> dict:
    doc = {"ambient_dim": P.ambient_dim, "vertices": [list(v) for v in P.vertices]}
    if name is not None:
        doc["name"] = name
    return doc


def hrep_document(H: HRep, ambient_dim: int, name: str = None) -> dict:
    doc = {
        "ambient_dim": ambient_dim,
        "inequalities": {"A": [list(r) for r in H.A], "b": [format_rational(x) for x in H.b]},
    }
    if name is not None:
        doc["name"] = name
    return doc


def dump_polytope(P: LatticePolytope, name: str = None) -> str:
    """Serialize P as a single-line document."""
    return json.dumps(polytope_document(P, name), separators=(",", ":"))
