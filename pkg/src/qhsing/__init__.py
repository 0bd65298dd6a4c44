"""Invariants of quasihomogeneous isolated hypersurface singularities and
criteria for lifting Leray residue classes to intersection homology."""

__version__ = "0.1.0"

from .catalog import TypeTag, catalog_normal_form
from .exactpoly import IntPoly, Poly, differentiate, evaluate_complex, parse_polynomial
from .linktopo import classify_link, delta_at_one, recognize_type
from .milnor import (
    characteristic_polynomial,
    is_isolated,
    jacobian_quotient_dims,
    milnor_number,
    poincare_polynomial,
    spectrum,
)
from .report import analyze
from .residue import lift_verdict, lp_exponent, min_scaling, perversity_target
from .weights import WeightSystem, find_weights, newton_distance
