"""
End-to-end maneuver verification on the navigation graph
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from maneuver_verifier.core.envelope import envelope_of
from maneuver_verifier.core.navgraph import (
    EdgeWeight,
    NavGraph,
    build_graph,
    count_paths,
    dijkstra,
    enumerate_traces,
    goal_candidates,
    path_cost,
    root_vertex,
    time_gap_weight,
)
from maneuver_verifier.core.partition import FiniteAbstraction, generate_abstraction
from maneuver_verifier.core.scenario import scenario_digest
from maneuver_verifier.errors import EvaluationError
from maneuver_verifier.ltl.evaluator import SemanticTrace, evaluate, first_violation
from maneuver_verifier.models.data_classes import Cell, Path, Scenario
from maneuver_verifier.rules.base import RuleSpec, load_rules_file
from maneuver_verifier.rules.traffic_rules import default_registry
from maneuver_verifier.rules.valuation import proposition_set, valuation_of
from maneuver_verifier.schemas.report_schemas import (
    DijkstraRecord,
    EnvelopeRecord,
    PipelineReport,
    TimingRecord,
    TraceRecord,
    VerdictRecord,
)
from maneuver_verifier.utils.config import Settings, VerifierConfig
from maneuver_verifier.utils.monitoring import PipelineMonitor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RuleVerdict:
    rule: str
    satisfied: bool
    violation_instant: Optional[int] = None  # 0-based


@dataclass(frozen=True)
class TraceResult:
    index: int
    path: Path
    cost: float
    verdicts: Tuple[RuleVerdict, ...]

    @property
    def satisfied(self) -> bool:
        return all(v.satisfied for v in self.verdicts)

    @property
    def first_violated(self) -> Optional[RuleVerdict]:
        return next((v for v in self.verdicts if not v.satisfied), None)

    @property
    def signatures(self) -> List[str]:
        return signatures_of(self.path)


def signatures_of(path: Path) -> List[str]:
    return [str(cell.signature) for cell in path]


def _sort_key(cost: float, path: Path) -> Tuple[float, Tuple[str, ...]]:
    return cost, tuple(signatures_of(path))


def verify_trace(
    path: Path,
    rules: Sequence[RuleSpec],
    congested: bool,
    obstacle_ids: Sequence[str],
) -> Tuple[RuleVerdict, ...]:
    """Evaluate every rule at instant 0 on the trace of the path"""

    trace = SemanticTrace.from_valuations(
        [valuation_of(cell, congested, obstacle_ids) for cell in path],
        atoms=proposition_set(obstacle_ids),
    )
    verdicts = []
    for rule in rules:
        missing = rule.atoms - set(trace.atoms)
        if missing:
            raise EvaluationError(
                f"rule {rule.name} references atoms absent from the scenario: "
                f"{sorted(missing)}"
            )
        projected = trace.project(rule.atoms)
        if evaluate(rule.formula, projected):
            verdicts.append(RuleVerdict(rule.name, True))
        else:
            verdicts.append(
                RuleVerdict(rule.name, False, first_violation(rule.formula, projected))
            )
    return tuple(verdicts)


@dataclass
class VerificationReport:
    """Everything one pipeline run produced"""

    scenario: Scenario
    config: VerifierConfig
    rules: Tuple[RuleSpec, ...]
    traces: "RankedTraces"
    results: Tuple[TraceResult, ...]
    dijkstra: Optional[TraceResult]
    metrics: Dict[str, object] = field(default_factory=dict)

    @property
    def abstraction(self) -> FiniteAbstraction:
        return self.traces.abstraction

    @property
    def graph(self) -> NavGraph:
        return self.traces.graph

    @property
    def satisfying(self) -> List[TraceResult]:
        return [r for r in self.results if r.satisfied]

    def to_schema(self) -> PipelineReport:
        envelope_cache: Dict = {}

        def record(result: TraceResult) -> TraceRecord:
            envelopes = None
            if self.config.emit_envelopes and result.satisfied:
                envelopes = [
                    EnvelopeRecord(**envelope.as_dict())
                    for envelope in envelope_of(
                        result.path, self.config.ds, envelope_cache
                    )
                ]
            violated = result.first_violated
            return TraceRecord(
                index=result.index,
                signatures=result.signatures,
                cost=result.cost,
                satisfied=result.satisfied,
                verdicts=[
                    VerdictRecord(
                        rule=v.rule,
                        satisfied=v.satisfied,
                        violation_instant=(
                            v.violation_instant + 1
                            if v.violation_instant is not None
                            else None
                        ),
                    )
                    for v in result.verdicts
                ],
                first_violated_rule=violated.rule if violated else None,
                envelopes=envelopes,
            )

        dijkstra_record = None
        if self.dijkstra is not None:
            dijkstra_record = DijkstraRecord(
                signatures=self.dijkstra.signatures,
                cost=self.dijkstra.cost,
                satisfied=self.dijkstra.satisfied,
            )

        return PipelineReport(
            scenario_digest=scenario_digest(self.scenario),
            num_steps=self.scenario.num_steps,
            step=self.scenario.step,
            congested=self.scenario.congested,
            rules=[rule.name for rule in self.rules],
            cells_per_step=self.abstraction.cells_per_step,
            vertices=self.graph.num_vertices,
            edges=self.graph.num_edges,
            trace_count=self.traces.trace_count,
            enumerated=len(self.traces.ranked),
            truncated=self.traces.truncated,
            checked=len(self.results),
            satisfying=len(self.satisfying),
            dijkstra=dijkstra_record,
            timings=[
                TimingRecord(stage=stage, seconds=seconds)
                for stage, seconds in self.metrics.get("timings", {}).items()
            ],
            total_seconds=self.metrics.get("total"),
            memory_usage_mb=self.metrics.get("memory_usage_mb"),
            traces=[record(r) for r in self.results],
        )


def apply_overrides(scenario: Scenario, config: VerifierConfig) -> Scenario:
    if config.step_override is not None:
        scenario = scenario.with_step(config.step_override)
    if config.congested_override is not None:
        scenario = scenario.with_congested(config.congested_override)
    return scenario


def resolve_rules(scenario: Scenario, config: VerifierConfig) -> List[RuleSpec]:
    extra = load_rules_file(config.rules_file) if config.rules_file else None
    registry = default_registry(extra)
    logger.info(f"Rule templates: {', '.join(registry.list_rules())}")
    return registry.rules_for(scenario)


@dataclass(frozen=True)
class RankedTraces:
    """Abstraction, graph and all root-to-goal traces sorted by cost"""

    abstraction: FiniteAbstraction
    graph: NavGraph
    root: Cell
    goals: Tuple[Cell, ...]
    ranked: Tuple[Tuple[float, Path], ...]
    trace_count: int
    truncated: bool
    best: Optional[Tuple[float, Path]]


def rank_traces(
    scenario: Scenario,
    config: Optional[VerifierConfig] = None,
    weight: EdgeWeight = time_gap_weight,
    monitor: Optional[PipelineMonitor] = None,
) -> RankedTraces:
    """Partition, build the graph, enumerate and cost-sort all traces"""

    config = config or VerifierConfig()
    monitor = monitor or PipelineMonitor()

    with monitor.stage("Partitioning"):
        abstraction = generate_abstraction(scenario)

    with monitor.stage("Graph generation"):
        graph = build_graph(
            abstraction.layers, abstraction.occupancy, scenario.step, weight=weight
        )
        root = root_vertex(graph, scenario.ego_s0, scenario.ego_d0)
        goals = goal_candidates(graph)

    with monitor.stage("Trace enumeration"):
        paths: List[Path] = []
        truncated = False
        for goal in goals:
            result = enumerate_traces(
                graph, root, goal, limit=config.max_traces - len(paths)
            )
            paths.extend(result.paths)
            truncated = truncated or result.truncated
        trace_count = len(paths)
        if truncated:
            trace_count = sum(count_paths(graph, root, goal) for goal in goals)
            logger.warning(
                f"Enumerated {len(paths)} of {trace_count} traces "
                f"(max_traces={config.max_traces})"
            )

    with monitor.stage("Dijkstra Search"):
        best: Optional[Tuple[float, Path]] = None
        for goal in goals:
            path = dijkstra(graph, root, goal)
            if path is None:
                continue
            candidate = (path_cost(graph, path), path)
            if best is None or _sort_key(*candidate) < _sort_key(*best):
                best = candidate

    with monitor.stage("Calculating costs"):
        ranked = sorted(
            ((path_cost(graph, path), path) for path in paths),
            key=lambda item: _sort_key(*item),
        )

    logger.info(f"{trace_count} traces from root {root} to {len(goals)} goal cells")
    return RankedTraces(
        abstraction=abstraction,
        graph=graph,
        root=root,
        goals=tuple(goals),
        ranked=tuple(ranked),
        trace_count=trace_count,
        truncated=truncated,
        best=best,
    )


def run_pipeline(
    scenario: Scenario,
    config: Optional[VerifierConfig] = None,
    rules: Optional[Sequence[RuleSpec]] = None,
    weight: EdgeWeight = time_gap_weight,
) -> VerificationReport:
    """
    Partition, connect, enumerate, sort and verify

    Args:
        scenario: Validated scenario
        config: Run options; overrides are applied before partitioning
        rules: Rules to check; defaults to the registry's rules for the scenario
        weight: Edge weight function of the navigation graph

    Returns:
        VerificationReport with per-trace verdicts in cost order
    """

    config = config or VerifierConfig()
    monitor = PipelineMonitor()
    scenario = apply_overrides(scenario, config)
    if rules is None:
        rules = resolve_rules(scenario, config)
    rules = tuple(rules)

    traces = rank_traces(scenario, config, weight, monitor)
    ids = [o.id for o in scenario.obstacles]

    def check(path: Path) -> Tuple[RuleVerdict, ...]:
        return verify_trace(path, rules, scenario.congested, ids)

    with monitor.stage("Verification"):
        to_check = traces.ranked
        if config.max_checked is not None and config.max_checked < len(to_check):
            to_check = to_check[: config.max_checked]
            logger.warning(
                f"Verifying the {config.max_checked} cheapest of "
                f"{len(traces.ranked)} traces"
            )

        workers = Settings.worker_count(config.threads)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            verdicts = list(executor.map(check, [path for _, path in to_check]))
        results = tuple(
            TraceResult(index, path, cost, verdict)
            for index, ((cost, path), verdict) in enumerate(zip(to_check, verdicts))
        )

        dijkstra_result = None
        if traces.best is not None:
            cost, path = traces.best
            dijkstra_result = TraceResult(-1, path, cost, check(path))

    for result in results:
        logger.debug(
            f"Trace {result.index} {' '.join(result.signatures)}: "
            f"{'satisfied' if result.satisfied else 'violated'}"
        )

    report = VerificationReport(
        scenario=scenario,
        config=config,
        rules=rules,
        traces=traces,
        results=results,
        dijkstra=dijkstra_result,
        metrics=monitor.get_metrics(),
    )
    logger.info(
        f"{len(report.satisfying)} of {len(results)} checked traces satisfy "
        f"{len(rules)} rules"
    )
    return report
