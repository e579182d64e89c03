"""Incidence (k, l)-colorings of sparse graphs: exact mad, constructive colorers, a verifier
and an exact solver for small instances."""

from .degenerate import color_degenerate
from .errors import (ExtensionExhausted, GraphParseError, HypothesisViolation, IncColorError,
                     InstanceTooLarge, InternalContradiction, MalformedColoringError, PeelStalled,
                     SearchInconclusive)
from .exact import chi_incidence, feasible
from .generic import color_generic
from .graph import Graph, degeneracy_order, load_graph, parse_dimacs, parse_edge_list
from .incidence import Incidence, IncidenceColoring, verify
from .mad import mad, satisfies_mad_bound

__all__ = [
    "ExtensionExhausted", "Graph", "GraphParseError", "HypothesisViolation", "IncColorError",
    "Incidence", "IncidenceColoring", "InstanceTooLarge", "InternalContradiction",
    "MalformedColoringError", "PeelStalled", "SearchInconclusive", "chi_incidence",
    "color_degenerate", "color_generic", "degeneracy_order", "feasible", "load_graph", "mad",
    "parse_dimacs", "parse_edge_list", "satisfies_mad_bound", "verify",
]
