"""
Navigation graph over free space-time cells

Vertices are cells keyed by (step, signature string); edges link cells at
consecutive steps that touch at both endpoint steps.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from maneuver_verifier.errors import GraphError
from maneuver_verifier.geometry import FrenetRect, closures_touch
from maneuver_verifier.models.data_classes import Cell, Path

logger = logging.getLogger(__name__)

NodeKey = Tuple[int, str]
EdgeWeight = Callable[[Cell, Cell, Sequence[FrenetRect], float], float]


def time_gap_weight(
    source: Cell, target: Cell, occupancy: Sequence[FrenetRect], step: float
) -> float:
    """step / (1 + gap), gap = s-distance from the target cell to the nearest box"""
    gap = min(
        (target.region.s_distance_to(box) for box in occupancy), default=math.inf
    )
    return step / (1.0 + gap)


class NavGraph:
    """Directed layered graph of cells backed by a networkx DiGraph"""

    def __init__(self, num_steps: int):
        self.num_steps = num_steps
        self.graph = nx.DiGraph()

    def add_cell(self, cell: Cell):
        self.graph.add_node(cell.key, cell=cell)

    def add_edge(self, source: Cell, target: Cell, weight: float):
        if target.step != source.step + 1:
            raise GraphError(f"edge {source} -> {target} skips a step")
        self.graph.add_edge(source.key, target.key, weight=weight)

    def cell(self, key: NodeKey) -> Cell:
        try:
            return self.graph.nodes[key]["cell"]
        except KeyError:
            raise GraphError(f"no vertex {key[0]}:{key[1]}") from None

    def cells_at(self, p: int) -> List[Cell]:
        return sorted(
            (data["cell"] for key, data in self.graph.nodes(data=True) if key[0] == p),
            key=lambda c: c.key,
        )

    def successors(self, cell: Cell) -> List[Cell]:
        return [self.cell(key) for key in sorted(self.graph.successors(cell.key))]

    def has_edge(self, source: Cell, target: Cell) -> bool:
        return self.graph.has_edge(source.key, target.key)

    def weight(self, source: Cell, target: Cell) -> float:
        try:
            return self.graph.edges[source.key, target.key]["weight"]
        except KeyError:
            raise GraphError(f"no edge {source} -> {target}") from None

    def edges(self) -> Iterator[Tuple[Cell, Cell, float]]:
        for u, v in sorted(self.graph.edges()):
            yield self.cell(u), self.cell(v), self.graph.edges[u, v]["weight"]

    @property
    def num_vertices(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def num_edges(self) -> int:
        return self.graph.number_of_edges()


def _adjacent(
    source: Cell,
    target: Cell,
    current: Dict[str, Cell],
    following: Dict[str, Cell],
    tolerance: float,
) -> bool:
    sig_source, sig_target = str(source.signature), str(target.signature)
    if sig_source == sig_target:
        return closures_touch(source.region, target.region, tolerance)

    # Signatures absent at either step contribute an empty region
    target_now = current.get(sig_target)
    source_next = following.get(sig_source)
    if target_now is None or source_next is None:
        return False
    return closures_touch(
        source.region, target_now.region, tolerance
    ) and closures_touch(source_next.region, target.region, tolerance)


def build_graph(
    layers: Sequence[Sequence[Cell]],
    occupancy: Sequence[Sequence[FrenetRect]],
    step: float,
    weight: EdgeWeight = time_gap_weight,
    tolerance: float = 0.0,
) -> NavGraph:
    """Connect cells at consecutive steps that are adjacent at both steps"""

    if not layers:
        raise GraphError("no cell layers to connect")

    graph = NavGraph(num_steps=len(layers) - 1)
    for layer in layers:
        for cell in layer:
            graph.add_cell(cell)

    by_signature = [{str(c.signature): c for c in layer} for layer in layers]
    for p in range(len(layers) - 1):
        for source in layers[p]:
            for target in layers[p + 1]:
                if _adjacent(
                    source, target, by_signature[p], by_signature[p + 1], tolerance
                ):
                    graph.add_edge(
                        source, target, weight(source, target, occupancy[p + 1], step)
                    )

    logger.info(
        f"Navigation graph: {graph.num_vertices} vertices, {graph.num_edges} edges"
    )
    return graph


def root_vertex(graph: NavGraph, ego_s0: float, ego_d0: float) -> Cell:
    """Step-0 cell containing the ego seed; ties go to the lowest signature"""
    candidates = [
        cell for cell in graph.cells_at(0) if cell.region.contains_point(ego_s0, ego_d0)
    ]
    if not candidates:
        raise GraphError(f"no step-0 cell contains the ego seed ({ego_s0}, {ego_d0})")
    return min(candidates, key=lambda c: str(c.signature))


def goal_candidates(graph: NavGraph) -> List[Cell]:
    return graph.cells_at(graph.num_steps)


def _check_endpoints(graph: NavGraph, root: Cell, goal: Cell):
    if root.step != 0:
        raise GraphError(f"root {root} is not at step 0")
    if goal.step != graph.num_steps:
        raise GraphError(f"goal {goal} is not at the final step {graph.num_steps}")
    graph.cell(root.key)
    graph.cell(goal.key)


@dataclass(frozen=True)
class TraceEnumeration:
    paths: Tuple[Path, ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.paths)


def enumerate_traces(
    graph: NavGraph, root: Cell, goal: Cell, limit: Optional[int] = None
) -> TraceEnumeration:
    """
    All root-to-goal paths, depth-first with children in signature order

    Args:
        graph: Navigation graph
        root: Step-0 cell
        goal: Final-step cell
        limit: Stop after this many paths and flag the result as truncated

    Returns:
        TraceEnumeration with the paths found so far
    """

    _check_endpoints(graph, root, goal)
    reaches_goal = nx.ancestors(graph.graph, goal.key) | {goal.key}
    if root.key not in reaches_goal:
        return TraceEnumeration(())

    paths: List[Path] = []
    stack: List[Tuple[Cell, ...]] = [(graph.cell(root.key),)]
    while stack:
        prefix = stack.pop()
        tail = prefix[-1]
        if tail.key == goal.key:
            if limit is not None and len(paths) >= limit:
                logger.warning(
                    f"Trace enumeration to {goal} truncated at {limit} paths"
                )
                return TraceEnumeration(tuple(paths), truncated=True)
            paths.append(prefix)
            continue
        children = [c for c in graph.successors(tail) if c.key in reaches_goal]
        for child in reversed(children):
            stack.append(prefix + (child,))

    return TraceEnumeration(tuple(paths))


def path_cost(graph: NavGraph, path: Path) -> float:
    return float(sum(graph.weight(u, v) for u, v in zip(path, path[1:])))


def dijkstra(graph: NavGraph, root: Cell, goal: Cell) -> Optional[Path]:
    """Minimum-cost path; equal costs resolve to the lexicographically lowest signatures"""

    _check_endpoints(graph, root, goal)
    root = graph.cell(root.key)
    heap = [(0.0, (str(root.signature),), (root,))]
    settled = set()
    while heap:
        cost, signatures, path = heapq.heappop(heap)
        tail = path[-1]
        if tail.key in settled:
            continue
        settled.add(tail.key)
        if tail.key == goal.key:
            return path
        for child in graph.successors(tail):
            if child.key not in settled:
                heapq.heappush(
                    heap,
                    (
                        cost + graph.weight(tail, child),
                        signatures + (str(child.signature),),
                        path + (child,),
                    ),
                )
    return None


def count_paths(graph: NavGraph, root: Cell, goal: Cell) -> int:
    """Number of root-to-goal paths from products of per-step transition matrices"""

    _check_endpoints(graph, root, goal)
    layers = [graph.cells_at(p) for p in range(graph.num_steps + 1)]
    index = [{c.key: i for i, c in enumerate(layer)} for layer in layers]

    counts = np.zeros(len(layers[0]), dtype=object)
    counts[:] = 0
    counts[index[0][root.key]] = 1
    for p in range(graph.num_steps):
        transition = np.zeros((len(layers[p]), len(layers[p + 1])), dtype=object)
        transition[:, :] = 0
        for cell in layers[p]:
            for child in graph.successors(cell):
                transition[index[p][cell.key], index[p + 1][child.key]] = 1
        counts = counts.dot(transition)
    return int(counts[index[-1][goal.key]])
