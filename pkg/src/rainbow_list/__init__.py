"""Rainbow and strong rainbow connection numbers, their list versions, and
the constructions that realise them."""

from .csp import Budget, CapacityError
from .dsl import build_graph, parse_spec
from .exact import ParamResult, compute_param, exists_colouring, param_bounds
from .families import FamilySpec, build_family
from .graph import BudgetExceeded, Graph, GraphError, graph_from_edges
from .lists import (
    ListAssignment,
    canonical_list_assignments,
    compute_list_param,
    decide_list_leq,
    exists_list_colouring,
)
from .rainbow import Property, check_property

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "CapacityError", "FamilySpec", "Graph", "GraphError",
    "ListAssignment", "ParamResult", "Property", "build_family", "build_graph",
    "canonical_list_assignments", "check_property", "compute_list_param", "compute_param",
    "decide_list_leq", "exists_colouring", "exists_list_colouring", "graph_from_edges",
    "param_bounds", "parse_spec",
]
