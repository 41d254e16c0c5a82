"""
Scenario handling, partitioning, navigation graph and verification pipeline
"""

from .envelope import cell_envelope, envelope_of
from .navgraph import (
    NavGraph,
    TraceEnumeration,
    build_graph,
    count_paths,
    dijkstra,
    enumerate_traces,
    goal_candidates,
    path_cost,
    root_vertex,
    time_gap_weight,
)
from .partition import (
    FiniteAbstraction,
    build_cells,
    generate_abstraction,
    partition_obstacle,
    partition_road_types,
)
from .pipeline import (
    RankedTraces,
    RuleVerdict,
    TraceResult,
    VerificationReport,
    rank_traces,
    run_pipeline,
    verify_trace,
)
from .scenario import (
    footprint_at,
    load_scenario,
    load_scenario_file,
    occupancy_at,
    predict_occupancy,
    scenario_digest,
    validate_scenario,
)

__all__ = [
    "FiniteAbstraction",
    "NavGraph",
    "RankedTraces",
    "RuleVerdict",
    "TraceEnumeration",
    "TraceResult",
    "VerificationReport",
    "build_cells",
    "build_graph",
    "cell_envelope",
    "count_paths",
    "dijkstra",
    "envelope_of",
    "enumerate_traces",
    "footprint_at",
    "generate_abstraction",
    "goal_candidates",
    "load_scenario",
    "load_scenario_file",
    "occupancy_at",
    "partition_obstacle",
    "partition_road_types",
    "path_cost",
    "predict_occupancy",
    "rank_traces",
    "root_vertex",
    "run_pipeline",
    "scenario_digest",
    "time_gap_weight",
    "validate_scenario",
    "verify_trace",
]
