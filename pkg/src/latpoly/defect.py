"""Discriminant degree and dual defect from alternating face-volume sums.

Both sums range over all nonempty faces F of P (P included) and use the
normalized lattice volume of each face, so a d-face contributes
``(d + 1) * Vol_Z(F)`` where the Euclidean form reads ``(d + 1)! vol(F)``.
Euler obstructions are taken to be 1, which is exact for smooth P.
"""

import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from latpoly.polytope import LatticePolytope
from latpoly.regularity import NotSmoothError, is_smooth


class SingularInputWarning(UserWarning):
    """Result assumes trivial Euler obstructions on a singular polytope."""


@dataclass(frozen=True)
class DefectReport:
    chern_sum: int
    delta: dict = field(default_factory=dict)
    codim: Optional[int] = None
    degree: Optional[int] = None
    defective: bool = False
    degenerate_embedding: bool = False


def _face_terms(P: LatticePolytope):
    fl = P.face_lattice
    vols = fl.volumes
    for F in fl:
        yield P.dim - F.dim, F.dim, vols[F.vertex_indices]


def _chern_sum(P: LatticePolytope) -> int:
    return sum((-1) ** codim * (d + 1) * vol for codim, d, vol in _face_terms(P))


def jet1_chern_degree(P: LatticePolytope, require_smooth: bool = True) -> int:
    """Top Chern class of the first jet bundle as a signed face-volume sum.

    Non-smooth input raises :class:`NotSmoothError` unless
    ``require_smooth=False``, in which case the sum is still evaluated and a
    :class:`SingularInputWarning` is emitted.
    """
    if not is_smooth(P):
        if require_smooth:
            raise NotSmoothError("the face sum equals c_n(J_1) only for smooth polytopes")
        warnings.warn("polytope is not smooth; face sum is not a Chern number",
                      SingularInputWarning, stacklevel=2)
    return _chern_sum(P)


def delta_i(P: LatticePolytope, i: int, _checked: bool = False) -> int:
    if i <= 0:
        raise ValueError(f"delta_i needs i >= 1, got {i}")
    if not _checked and not is_smooth(P):
        warnings.warn("polytope is not smooth; Euler obstructions assumed trivial",
                      SingularInputWarning, stacklevel=2)
    extra = (-1) ** (i - 1) * (i - 1)
    # comb() is 0 for i > d + 1, which keeps the sum finite
    return sum((-1) ** codim * (comb(d + 1, i) + extra) * vol
               for codim, d, vol in _face_terms(P))


def dual_defect(P: LatticePolytope) -> DefectReport:
    """Codimension and degree of the dual variety from the first nonzero delta."""
    if not is_smooth(P):
        warnings.warn("polytope is not smooth; Euler obstructions assumed trivial",
                      SingularInputWarning, stacklevel=2)
    delta = {i: delta_i(P, i, _checked=True) for i in range(1, P.dim + 2)}
    codim = next((i for i in sorted(delta) if delta[i] != 0), None)
    degree = delta[codim] if codim is not None else None
    return DefectReport(
        chern_sum=delta[1],
        delta=delta,
        codim=codim,
        degree=degree,
        defective=delta[1] == 0,
        degenerate_embedding=degree is not None and degree < 0,
    )


def is_dually_defective(P: LatticePolytope) -> bool:
    return jet1_chern_degree(P) == 0
