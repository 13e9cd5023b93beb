"""Exact computations on finite sets of points in projective space: vanishing
ideals, minimal free resolutions, socle degrees, and the minimum distance of
the associated evaluation codes."""

__version__ = "0.1.0"

from .artinian import artinian_reduce, min_socle_degree_oracle, socle_degrees
from .constructions import MiglioreParams, classify, compute_s, generic_points, load_fixture, migliore_config
from .field import QQ, PrimeField
from .groebner import GroebnerBasis, buchberger, buchberger_moeller, hilbert_function_eval, hilbert_function_gb
from .io import dump_points, parse_point_text, read_points, write_points
from .linalg import ExactMatrix, kernel_basis, rank, rref
from .pointset import ProjectivePointSet, normalize
from .points import (
    delta_gamma,
    generalized_distance,
    hyp,
    is_nondegenerate,
    min_distance,
    separator_degree,
    veronese,
)
from .poly import Polynomial, parse_polynomial
from .report import analyze
from .resolution import betti_table, minimal_resolution, render_betti, schreyer_resolution, verify_resolution
