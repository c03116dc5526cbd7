"""Recognition of well-covered graphs, W2 graphs and shedding vertices."""

from .errors import (
    ContractError,
    FamilyError,
    GraphFormatError,
    InputError,
    PreconditionError,
    SizeLimitError,
    WellcovError,
)
from .graph import Graph, VertexSet, cycle_graph, complete_graph, path_graph, star_graph
from .verdict import Verdict
from .oracle import (
    independence_number,
    is_relating_oracle,
    is_shedding_oracle,
    is_w2_oracle,
    is_well_covered_oracle,
)
from .recognizers import dispatch_w2, well_covered
from .formats import parse_graph, format_graph, from_graph6, to_graph6
from .reduction import SatInstance, parse_cnf, sat_to_shed

__version__ = "0.1.0"

__all__ = [
    "ContractError",
    "FamilyError",
    "Graph",
    "GraphFormatError",
    "InputError",
    "PreconditionError",
    "SatInstance",
    "SizeLimitError",
    "Verdict",
    "VertexSet",
    "WellcovError",
    "complete_graph",
    "cycle_graph",
    "dispatch_w2",
    "format_graph",
    "from_graph6",
    "independence_number",
    "is_relating_oracle",
    "is_shedding_oracle",
    "is_w2_oracle",
    "is_well_covered_oracle",
    "parse_cnf",
    "parse_graph",
    "path_graph",
    "sat_to_shed",
    "star_graph",
    "to_graph6",
    "well_covered",
]
