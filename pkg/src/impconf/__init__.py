"""Construct, enumerate and certify polygonal impossible configurations."""

__version__ = "0.1.0"

from .cmap import CombinatorialMap, build_map, canonical_configuration, canonical_form, detect_ring_of_squares
from .fileformat import parse_configuration, serialize_configuration
from .generators import EnumerationOptions, enumerate_configurations, gen_pn, gen_small, splice
from .model import Configuration, GlueEntry, Polygon, validate_definition
from .obstruction import build_angle_lp, check_obstruction, solve_slack
from .parity import verify_parity_theorem
from .topology import boundary_curves, puncture_plan, surface_summary, trace_tracks

__all__ = [
    "CombinatorialMap", "Configuration", "EnumerationOptions", "GlueEntry", "Polygon",
    "boundary_curves", "build_angle_lp", "build_map", "canonical_configuration", "canonical_form",
    "check_obstruction", "detect_ring_of_squares", "enumerate_configurations", "gen_pn", "gen_small",
    "parse_configuration", "puncture_plan", "serialize_configuration", "solve_slack", "splice",
    "surface_summary", "trace_tracks", "validate_definition", "verify_parity_theorem",
]
