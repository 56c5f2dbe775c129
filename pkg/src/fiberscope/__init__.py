"""Fibrations, Thurston norm balls and real places of surface bundles."""

from .alexnorm import LaurentPoly2, RatPolygon, alexander_norm, newton_polytope, parse_laurent, unit_ball
from .brown import CohomologyClass, functional_extremes, is_fibered, nonfibered_directions
from .covers import bundle_covered_types, conjecture_coverage, massey_degree, mt_a, mt_b, mt_c
from .fibertypes import CuspData, SurfaceType, enumerate_types, fiber_type, puncture_count
from .realroots import IntPolynomial, count_real_roots, has_real_root, parse_polynomial
from .words import LatticePath, Word, build_path, exponent_sums, parse_word

__version__ = "0.1.0"
