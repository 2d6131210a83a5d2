"""Minimum k-cut solver: sparsification, contraction, and island discovery."""

from .borders import (
    BorderParams,
    contract_random,
    cut_survives,
    default_trials,
    enumerate_borders,
    random_s_cut,
    tau_for,
    wilson_lower,
)
from .generators import (
    PlantedInfo,
    certified_min_kcut,
    cliques_bridge,
    complete_graph,
    cycle_graph,
    gen_instance,
    gnp_graph,
    path_graph,
    planted_instance,
    star_graph,
)
from .graph import (
    Graph,
    GraphError,
    InvalidCutError,
    KCut,
    ParseError,
    VertexPartition,
    canonical_labels,
    conductance,
    connected_components,
    contract,
    cut_value,
    graph_to_text,
    induced_subgraph,
    parse_graph,
)
from .islands import extend_border, matmul, solve_r_island
from .oracle import (
    SizeLimitError,
    branch_and_bound_min_kcut,
    brute_force_min_kcut,
    brute_force_r_island,
    stoer_wagner_mincut,
    sv_2approx,
)
from .partition import (
    Border,
    KTInvariantError,
    KTParams,
    border_agrees,
    borders_of_cut,
    expander_decompose,
    is_expander,
    kt_partition,
    min_conductance_subset,
    regularize,
    shatter,
    shave,
    trim,
)
from .pipeline import PipelineConfig, SolveReport, exact_min_kcut, min_kcut
from .rng import SplitMix64, mix64
from .sparsify import forest_decomposition, ni_sparsify

__version__ = "0.1.0"

__all__ = [
    "Border",
    "BorderParams",
    "Graph",
    "GraphError",
    "InvalidCutError",
    "KCut",
    "KTInvariantError",
    "KTParams",
    "ParseError",
    "PipelineConfig",
    "PlantedInfo",
    "SizeLimitError",
    "SolveReport",
    "SplitMix64",
    "VertexPartition",
    "border_agrees",
    "borders_of_cut",
    "branch_and_bound_min_kcut",
    "brute_force_min_kcut",
    "brute_force_r_island",
    "canonical_labels",
    "certified_min_kcut",
    "cliques_bridge",
    "complete_graph",
    "conductance",
    "connected_components",
    "contract",
    "contract_random",
    "cut_survives",
    "cut_value",
    "cycle_graph",
    "default_trials",
    "enumerate_borders",
    "exact_min_kcut",
    "expander_decompose",
    "extend_border",
    "forest_decomposition",
    "gen_instance",
    "gnp_graph",
    "graph_to_text",
    "induced_subgraph",
    "is_expander",
    "kt_partition",
    "matmul",
    "min_conductance_subset",
    "min_kcut",
    "mix64",
    "ni_sparsify",
    "parse_graph",
    "path_graph",
    "planted_instance",
    "random_s_cut",
    "regularize",
    "shatter",
    "shave",
    "solve_r_island",
    "star_graph",
    "stoer_wagner_mincut",
    "sv_2approx",
    "tau_for",
    "trim",
    "wilson_lower",
]
