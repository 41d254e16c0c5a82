"""
Free space-time partitioning into signed collision-free cells
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from maneuver_verifier.core.scenario import occupancy_at
from maneuver_verifier.errors import PartitionError
from maneuver_verifier.geometry import FrenetRect, Region, intersect
from maneuver_verifier.models.data_classes import Cell, RoadModel, Scenario, Signature
from maneuver_verifier.models.enums import Relation, RoadType

logger = logging.getLogger(__name__)

RELATION_ORDER = (Relation.FRONT, Relation.BEHIND, Relation.LEFT, Relation.RIGHT)


def partition_road_types(road: RoadModel) -> List[Tuple[RoadType, Region]]:
    """One full-width region per road-type interval, in s order"""
    return [
        (
            interval.road_type,
            Region.from_bounds(interval.s_lo, interval.s_hi, road.d_min, road.d_max),
        )
        for interval in road.road_type_intervals
    ]


def partition_obstacle(box: FrenetRect, road: RoadModel) -> Dict[Relation, Region]:
    """
    Split the road around one obstacle box

    Front and behind span the full road width; left and right are limited
    to the box's s-span. Any of the four may be empty.
    """
    s_lo = max(box.s_lo, road.s_begin)
    s_hi = min(box.s_hi, road.s_end)
    return {
        Relation.FRONT: Region.from_bounds(
            max(box.s_hi, road.s_begin), road.s_end, road.d_min, road.d_max
        ),
        Relation.BEHIND: Region.from_bounds(
            road.s_begin, min(box.s_lo, road.s_end), road.d_min, road.d_max
        ),
        Relation.LEFT: Region.from_bounds(
            s_lo, s_hi, max(box.d_hi, road.d_min), road.d_max
        ),
        Relation.RIGHT: Region.from_bounds(
            s_lo, s_hi, road.d_min, min(box.d_lo, road.d_max)
        ),
    }


def _road_type_regions(road: RoadModel) -> List[Tuple[RoadType, Region]]:
    # Same-type intervals share one working region so a signature names one cell
    merged: Dict[RoadType, Region] = {}
    for road_type, region in partition_road_types(road):
        merged[road_type] = merged.get(road_type, Region()).union(region)
    return [(rt, merged[rt]) for rt in RoadType if rt in merged]


def _refine(
    road: RoadModel, boxes: Tuple[FrenetRect, ...]
) -> List[Tuple[Tuple[Relation, ...], RoadType, Region]]:
    working = [((), rt, region) for rt, region in _road_type_regions(road)]
    for box in boxes:
        split = partition_obstacle(box, road)
        refined = []
        for relations, road_type, region in working:
            for relation in RELATION_ORDER:
                piece = intersect(region, split[relation])
                if not piece.is_empty:
                    refined.append((relations + (relation,), road_type, piece))
        working = refined
    return working


def build_cells(scenario: Scenario, p: int) -> List[Cell]:
    """Cells at step p, sorted by signature string"""

    boxes = occupancy_at(scenario, p)
    cells = [
        Cell(Signature(relations, road_type), p, region)
        for relations, road_type, region in _refine(scenario.road, boxes)
    ]
    cells.sort(key=lambda c: str(c.signature))

    if p == 0 and not any(
        c.region.contains_point(scenario.ego_s0, scenario.ego_d0) for c in cells
    ):
        raise PartitionError(
            f"ego seed ({scenario.ego_s0}, {scenario.ego_d0}) is not covered "
            "by any free-space cell at step 0"
        )

    logger.debug(f"Step {p}: {len(cells)} cells")
    return cells


@dataclass(frozen=True)
class FiniteAbstraction:
    """Per-step cell layers with the obstacle occupancy they were cut from"""

    scenario: Scenario
    layers: Tuple[Tuple[Cell, ...], ...]
    occupancy: Tuple[Tuple[FrenetRect, ...], ...]

    @property
    def num_steps(self) -> int:
        return len(self.layers) - 1

    @property
    def cells_per_step(self) -> List[int]:
        return [len(layer) for layer in self.layers]

    @property
    def cell_count(self) -> int:
        return sum(self.cells_per_step)

    def cell(self, p: int, signature: str) -> Optional[Cell]:
        for cell in self.layers[p]:
            if str(cell.signature) == signature:
                return cell
        return None

    def to_document(self) -> Dict[str, object]:
        """Per-step cell listing for the partition dump"""
        ids = [o.id for o in self.scenario.obstacles]
        return {
            "num_steps": self.num_steps,
            "step": self.scenario.step,
            "steps": [
                {
                    "step": p,
                    "time": p * self.scenario.step,
                    "occupancy": {
                        obstacle_id: box.as_list()
                        for obstacle_id, box in zip(ids, self.occupancy[p])
                    },
                    "cells": [
                        {
                            "signature": str(cell.signature),
                            "area": cell.region.area,
                            "rects": [r.as_list() for r in cell.region.rects],
                        }
                        for cell in layer
                    ],
                }
                for p, layer in enumerate(self.layers)
            ],
        }


def generate_abstraction(scenario: Scenario) -> FiniteAbstraction:
    layers = []
    occupancy = []
    for p in range(scenario.num_steps + 1):
        occupancy.append(occupancy_at(scenario, p))
        layers.append(tuple(build_cells(scenario, p)))

    abstraction = FiniteAbstraction(scenario, tuple(layers), tuple(occupancy))
    logger.info(
        f"Partitioned {scenario.num_steps + 1} steps into "
        f"{abstraction.cell_count} cells"
    )
    return abstraction
