"""Exact combinatorics for symmetric spaces of minimal rank.

Root data, Weyl groups, diagram folding, B-orbits via twisted involutions,
Demazure characters and branching from G to K, all in integer arithmetic.
Weights are integer tuples in simple-root coordinates.
"""

from .branching import BranchingResult, branch, bundle_rank, extend_weight
from .charring import WeightPolynomial, demazure_simple, demazure_word, joseph_character, weyl_character
from .errors import MinRankError
from .folding import CATALOG, FoldedDatum, InvolutionDatum, build_space, fold, involution
from .ktheory import IndexReport, indices
from .orbits import OrbitRecord, closure_leq, enumerate_orbits, generic_position_schubert, peel
from .rootdata import RootDatum, build_datum, datum_from_cartan, product, weyl_dim
from .weyl import WeylElement, bruhat_leq, element_from_word, enumerate_weyl

__version__ = "0.1.0"

__all__ = [
    "BranchingResult",
    "CATALOG",
    "FoldedDatum",
    "IndexReport",
    "InvolutionDatum",
    "MinRankError",
    "OrbitRecord",
    "RootDatum",
    "WeightPolynomial",
    "WeylElement",
    "branch",
    "bruhat_leq",
    "build_datum",
    "build_space",
    "bundle_rank",
    "closure_leq",
    "datum_from_cartan",
    "demazure_simple",
    "demazure_word",
    "element_from_word",
    "enumerate_orbits",
    "enumerate_weyl",
    "extend_weight",
    "fold",
    "generic_position_schubert",
    "indices",
    "involution",
    "joseph_character",
    "peel",
    "product",
    "weyl_character",
    "weyl_dim",
]
