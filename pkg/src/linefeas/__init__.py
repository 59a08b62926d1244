"""Which (N, M) pairs are realized by a line graph with N vertices and M edges."""

from .closed_form import (
    IntervalSet,
    is_feasible_closed,
    min_nonfeasible,
    nonfeasible_intervals,
)
from .constructors import Witness, witness
from .graph_core import DegreeSequence, Graph, line_graph
from .oracle import feasible_set

__all__ = [
    "DegreeSequence",
    "Graph",
    "IntervalSet",
    "Witness",
    "feasible_set",
    "is_feasible_closed",
    "line_graph",
    "min_nonfeasible",
    "nonfeasible_intervals",
    "witness",
]
