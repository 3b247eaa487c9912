"""Comparative transitivity measures for directed graphs."""

from .generators import (
    ErParams,
    WindmillParams,
    gen_clique_union,
    gen_erdos_renyi,
    gen_windmill,
    windmill_analytic,
)
from .graph import (
    DegenerateGraphError,
    DegreeSummary,
    DiGraph,
    GraphParseError,
    IngestOptions,
    degree_summary,
    parse_adjacency_matrix,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .measures import Measure, MeasureReport, all_measures
from .profile import conditional_profile

__version__ = "0.1.0"
