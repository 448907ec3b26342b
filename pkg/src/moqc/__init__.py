"""Exact enumeration of nondominated (density, size) quasi-cliques."""

from .estimator import QuasiCliqueFrontier, check_graph
from .exceptions import (
    GraphParseError, InvalidInputError, InvariantError, MoqcError, NoCandidateError,
    NoFeasibleQuasiCliqueError, SizeGuardError, TimeLimitExceeded, UndefinedDensityError,
)
from .graph import (
    Graph, density, induced_edge_count, load_graph, max_degree_extension_vertex,
    min_degree_vertex, parse_graph,
)
from .maxflow import FlowNetwork, WsSolution, max_flow_min_cut, ws_mos_optimum
from .oracles import EdksResult, dks_density, edks, mqc
from .pareto import (
    Entry, LabeledFrontier, MoqcPoint, MosPoint, SupportedPair, map_mos_to_moqc,
    moqc_dominates, mos_dominates, remove_non_maximum_cliques, weff_certificate,
)
from .reference import brute_frontier, brute_is_weakly_efficient, brute_ws
from .strategies import (
    RunReport, baseline, dichotomic_search, max_d, min_d, moqc_alg1, moqc_alg2,
    run_moqc_alg1, run_moqc_alg2, solve_mos, three_phase, two_phase,
)

__version__ = "0.1.0"

__all__ = [
    "QuasiCliqueFrontier", "check_graph",
    "GraphParseError", "InvalidInputError", "InvariantError", "MoqcError", "NoCandidateError",
    "NoFeasibleQuasiCliqueError", "SizeGuardError", "TimeLimitExceeded", "UndefinedDensityError",
    "Graph", "density", "induced_edge_count", "load_graph", "max_degree_extension_vertex",
    "min_degree_vertex", "parse_graph",
    "FlowNetwork", "WsSolution", "max_flow_min_cut", "ws_mos_optimum",
    "EdksResult", "dks_density", "edks", "mqc",
    "Entry", "LabeledFrontier", "MoqcPoint", "MosPoint", "SupportedPair", "map_mos_to_moqc",
    "moqc_dominates", "mos_dominates", "remove_non_maximum_cliques", "weff_certificate",
    "brute_frontier", "brute_is_weakly_efficient", "brute_ws",
    "RunReport", "baseline", "dichotomic_search", "max_d", "min_d", "moqc_alg1", "moqc_alg2",
    "run_moqc_alg1", "run_moqc_alg2", "solve_mos", "three_phase", "two_phase",
]
