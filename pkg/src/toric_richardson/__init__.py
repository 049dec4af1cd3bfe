"""Toric Richardson varieties in the full flag variety, studied through exact combinatorics."""

from .classify import ToricVerdict, classify_toric, has_two_crown_subinterval, is_toric
from .errors import (
    DisagreementBug,
    InconsistentFace,
    MixedRank,
    MultipleCollections,
    NonemptyIntervalRequired,
    NoSolution,
    NotToric,
    ToricRichardsonError,
)
from .families import even_family, hypercube_constituent, hypercube_perms, is_dyadic
from .mrgraph import (
    ReducedWord,
    WiringGraph,
    build_graph,
    default_reduced_word,
    flag_minor,
    flag_minor_toric,
    graph_for,
    ni_path_collections,
    pds,
    symbolic_matrix,
)
from .perm import BruhatInterval, Permutation, bruhat_leq, interval, interval_poset, r_polynomial
from .plabic import PlabicGraph, family_star_graph, hypercube_graph, perfect_orientations, positroid_from_graph
from .polytope.hull import LatticePolytope, face_lattice, hull, minkowski_sum
from .polytope.moment import moment_data, moment_polytope, summand_polytope
from .positroid import Constituent, constituent, grassmann_necklace, verify_matroid

__version__ = "0.1.0"
