"""Boundary polynomial of a graph and the invariants it encodes."""

from .enumerator import (
    EnumerationCapError,
    boundary,
    boundary_polynomial,
    restricted_polynomial,
    restricted_table,
    restricted_vector,
)
from .graphs import Graph, GraphError, family, load_graph
from .invariants import InvariantReport, NotAGraphPolynomialError, invariant_report
from .poly import BoundaryPolynomial, emit, evaluate

__all__ = [
    "BoundaryPolynomial",
    "EnumerationCapError",
    "Graph",
    "GraphError",
    "InvariantReport",
    "NotAGraphPolynomialError",
    "boundary",
    "boundary_polynomial",
    "emit",
    "evaluate",
    "family",
    "invariant_report",
    "load_graph",
    "restricted_polynomial",
    "restricted_table",
    "restricted_vector",
]
