"""Exact lattice polytope toolkit: hulls, face volumes, dual defect, Cayley sums, adjunction."""

from latpoly.adjunction import (
    INFINITY,
    AdjunctionProfile,
    adjoint_polytope,
    adjunction_profile,
    codegree,
    core,
    nef_value,
    q_codegree,
)
from latpoly.cayley import (
    CayleyDecomposition,
    WidthOneFunctional,
    cayley_config,
    cayley_decompose,
    cayley_sum,
    max_cayley_length,
    width_one_functionals,
)
from latpoly.defect import DefectReport, delta_i, dual_defect, is_dually_defective, jet1_chern_degree
from latpoly.documents import DocumentError, dump_polytope, parse_polytope
from latpoly.kernels import BACKEND
from latpoly.linalg import (
    hermite_normal_form,
    is_unimodular_basis,
    lattice_map_surjective,
    primitive_vector,
    smith_invariants,
)
from latpoly.polytope import (
    HRep,
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
    product_polytope,
    simplex,
)
from latpoly.regularity import NotSmoothError, edge_lattice_lengths, is_simple, is_smooth, jet_level, regularity
from latpoly.verifier import check_cayley_lemma, run_corpus, verify_equivalences

__version__ = "0.1.0"
