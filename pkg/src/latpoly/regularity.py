"""Simplicity, smoothness and edge lengths of lattice polytopes.

All tests run in the lattice of the affine span, so a smooth polygon
embedded in Z^3 is still reported smooth.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from latpoly.linalg import det, primitive_vector
from latpoly.polytope import LatticePolytope


class NotSmoothError(ValueError):
    """Raised by operations whose criterion only holds for smooth polytopes."""


@dataclass(frozen=True)
class RegularityReport:
    simple: bool
    smooth: bool
    min_edge_length: int
    offending_vertex: Optional[int] = None


def _edge_directions(P: LatticePolytope):
    loc = P._local_vertices
    dirs = {i: [] for i in range(len(P.vertices))}
    for i, j in P.edges:
        d = tuple(b - a for a, b in zip(loc[i], loc[j]))
        dirs[i].append(primitive_vector(d))
        dirs[j].append(primitive_vector(tuple(-c for c in d)))
    return dirs


def _first_bad_vertex(P: LatticePolytope, smooth: bool) -> Optional[int]:
    if P.dim == 0:
        return None
    for i, dirs in _edge_directions(P).items():
        if len(dirs) != P.dim:
            return i
        if smooth and abs(det(dirs)) != 1:
            return i
    return None


def is_simple(P: LatticePolytope) -> bool:
    """Every vertex lies on exactly dim(P) edges."""
    return _first_bad_vertex(P, smooth=False) is None


def is_smooth(P: LatticePolytope) -> bool:
    """Simple, and the primitive edge directions at each vertex form a lattice basis."""
    return _first_bad_vertex(P, smooth=True) is None


def edge_lattice_lengths(P: LatticePolytope) -> dict:
    """Map each edge (pair of vertex indices) to its number of lattice points minus one."""
    out = {}
    for i, j in P.edges:
        g = 0
        for a, b in zip(P.vertices[i], P.vertices[j]):
            g = gcd(g, b - a)
        out[(i, j)] = g
    return out


def jet_level(P: LatticePolytope) -> int:
    """Largest k such that the polarized toric variety of P is k-jet spanned.

    For smooth P this is the minimum lattice length of an edge.
    """
    if not is_smooth(P):
        raise NotSmoothError("jet level is only characterized for smooth polytopes")
    lengths = edge_lattice_lengths(P)
    if not lengths:
        raise ValueError("a point has no edges")
    return min(lengths.values())


def regularity(P: LatticePolytope) -> RegularityReport:
    bad_simple = _first_bad_vertex(P, smooth=False)
    bad_smooth = bad_simple if bad_simple is not None else _first_bad_vertex(P, smooth=True)
    lengths = edge_lattice_lengths(P)
    return RegularityReport(
        simple=bad_simple is None,
        smooth=bad_smooth is None,
        min_edge_length=min(lengths.values()) if lengths else 1,
        offending_vertex=bad_smooth,
    )
