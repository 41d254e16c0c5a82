"""
Scenario ingestion, validation and constant-acceleration occupancy prediction
"""

import hashlib
import json
import logging
import math
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Tuple

import yaml
from pydantic import ValidationError

from maneuver_verifier.errors import ScenarioParseError, ScenarioValidationError
from maneuver_verifier.geometry import FrenetRect
from maneuver_verifier.models.data_classes import (
    Obstacle,
    RoadModel,
    RoadTypeInterval,
    Scenario,
)
from maneuver_verifier.models.enums import RoadType
from maneuver_verifier.schemas.scenario_schemas import ScenarioDocument

logger = logging.getLogger(__name__)

STEP_TOLERANCE = 1e-9
OBSTACLE_NUMBERS = (
    "half_length",
    "half_width",
    "s0",
    "d0",
    "s_vel",
    "d_vel",
    "s_acc",
    "d_acc",
)


def load_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document"""

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        problem = getattr(e, "problem", None) or str(e)
        raise ScenarioParseError(f"malformed document: {problem}", line=line) from e

    if not isinstance(data, dict):
        raise ScenarioParseError("scenario document must be a mapping")

    try:
        document = ScenarioDocument.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field_path = ".".join(str(part) for part in error["loc"])
        raise ScenarioParseError(error["msg"], field_path=field_path) from e

    return validate_scenario(_to_scenario(document))


def load_scenario_file(path: str) -> Scenario:
    text = Path(path).read_text(encoding="utf-8")
    logger.info(f"Loading scenario from {path}")
    return load_scenario(text)


def _to_scenario(document: ScenarioDocument) -> Scenario:
    road = document.road
    if not (road.s_begin < road.s_end and road.d_min < road.d_max):
        raise ScenarioValidationError(
            "road extent is empty",
            f"s [{road.s_begin}, {road.s_end}], d [{road.d_min}, {road.d_max}]",
        )

    intervals = _tile_road_types(
        road.s_begin,
        road.s_end,
        [(rt.s_lo, rt.s_hi, rt.type) for rt in road.road_types],
    )
    road_model = RoadModel(
        s_begin=road.s_begin,
        s_end=road.s_end,
        d_min=road.d_min,
        d_max=road.d_max,
        road_type_intervals=intervals,
    )
    obstacles = tuple(
        Obstacle(
            id=o.id,
            kind=o.kind,
            half_length=o.half_length,
            half_width=o.half_width,
            s0=o.s0,
            d0=o.d0,
            s_vel=o.s_vel,
            d_vel=o.d_vel,
            s_acc=o.s_acc,
            d_acc=o.d_acc,
        )
        for o in document.obstacles
    )
    return Scenario(
        road=road_model,
        obstacles=obstacles,
        ego_s0=document.ego.s0,
        ego_d0=document.ego.d0,
        horizon=document.horizon,
        step=document.step,
        congested=document.congested,
    )


def _tile_road_types(
    s_begin: float, s_end: float, entries: List[Tuple[float, float, RoadType]]
) -> Tuple[RoadTypeInterval, ...]:
    """Sort the typed intervals and fill the gaps with carriageway"""

    entries = sorted(entries, key=lambda e: (e[0], e[1]))
    for s_lo, s_hi, _ in entries:
        if not s_lo < s_hi:
            raise ScenarioValidationError(
                "road_type interval is empty", f"[{s_lo}, {s_hi}]"
            )
        if s_lo < s_begin or s_hi > s_end:
            raise ScenarioValidationError(
                "road_type interval outside road", f"[{s_lo}, {s_hi}]"
            )
    for (lo_a, hi_a, _), (lo_b, hi_b, _) in zip(entries, entries[1:]):
        if lo_b < hi_a:
            raise ScenarioValidationError(
                "road_type_intervals overlap",
                f"[{lo_a}, {hi_a}] and [{lo_b}, {hi_b}]",
            )

    intervals: List[RoadTypeInterval] = []
    cursor = s_begin
    for s_lo, s_hi, road_type in entries:
        if cursor < s_lo:
            intervals.append(RoadTypeInterval(cursor, s_lo, RoadType.CARRIAGEWAY))
        intervals.append(RoadTypeInterval(s_lo, s_hi, road_type))
        cursor = s_hi
    if cursor < s_end:
        intervals.append(RoadTypeInterval(cursor, s_end, RoadType.CARRIAGEWAY))
    return tuple(intervals)


def _check_finite(scenario: Scenario):
    road = scenario.road
    values = {
        "road.s_begin": road.s_begin,
        "road.s_end": road.s_end,
        "road.d_min": road.d_min,
        "road.d_max": road.d_max,
        "ego.s0": scenario.ego_s0,
        "ego.d0": scenario.ego_d0,
        "horizon": scenario.horizon,
        "step": scenario.step,
    }
    for i, interval in enumerate(road.road_type_intervals):
        values[f"road_types.{i}.s_lo"] = interval.s_lo
        values[f"road_types.{i}.s_hi"] = interval.s_hi
    for o in scenario.obstacles:
        for name in OBSTACLE_NUMBERS:
            values[f"{o.id}.{name}"] = getattr(o, name)
    bad = [name for name, value in values.items() if not math.isfinite(value)]
    if bad:
        raise ScenarioValidationError("values must be finite", ", ".join(bad))


def validate_scenario(scenario: Scenario) -> Scenario:
    """Check every scenario invariant; returns the scenario unchanged"""

    road = scenario.road
    _check_finite(scenario)
    if not (road.s_begin < road.s_end and road.d_min < road.d_max):
        raise ScenarioValidationError("road extent is empty")

    cursor = road.s_begin
    for interval in road.road_type_intervals:
        if not interval.s_lo < interval.s_hi:
            raise ScenarioValidationError(
                "road_type interval is empty", f"[{interval.s_lo}, {interval.s_hi}]"
            )
        if interval.s_lo < cursor:
            raise ScenarioValidationError("road_type_intervals overlap")
        if interval.s_lo > cursor:
            raise ScenarioValidationError(
                "road_type_intervals leave a gap", f"at s={cursor}"
            )
        cursor = interval.s_hi
    if cursor != road.s_end:
        raise ScenarioValidationError(
            "road_type_intervals do not tile the road", f"end at s={cursor}"
        )

    if scenario.step <= 0 or scenario.horizon <= 0:
        raise ScenarioValidationError("horizon and step must be positive")
    ratio = scenario.horizon / scenario.step
    n = round(ratio)
    if n < 1 or abs(n * scenario.step - scenario.horizon) > STEP_TOLERANCE * max(
        1.0, scenario.horizon
    ):
        raise ScenarioValidationError(
            "horizon / step must be a positive integer",
            f"horizon={scenario.horizon}, step={scenario.step}",
        )

    ids = [o.id for o in scenario.obstacles]
    if len(set(ids)) != len(ids):
        raise ScenarioValidationError("obstacle ids not unique", ", ".join(ids))

    for obstacle in scenario.obstacles:
        if obstacle.half_length <= 0 or obstacle.half_width <= 0:
            raise ScenarioValidationError(
                "obstacle extent must be positive", obstacle.id
            )
        for p in range(n + 1):
            box = occupancy_of(obstacle, p, scenario.step, n)
            if box.d_lo < road.d_min or box.d_hi > road.d_max:
                raise ScenarioValidationError(
                    "obstacle footprint leaves d_extent",
                    f"{obstacle.id} at step {p}: d [{box.d_lo:g}, {box.d_hi:g}]",
                )

    if not road.extent.contains_point(scenario.ego_s0, scenario.ego_d0):
        raise ScenarioValidationError(
            "ego seed outside road", f"({scenario.ego_s0}, {scenario.ego_d0})"
        )
    for obstacle in scenario.obstacles:
        if occupancy_of(obstacle, 0, scenario.step, n).contains_point(
            scenario.ego_s0, scenario.ego_d0
        ):
            raise ScenarioValidationError(
                "ego seed inside obstacle occupancy", obstacle.id
            )

    return scenario


def _position(x0: float, vel: float, acc: float, t: float) -> float:
    return x0 + vel * t + 0.5 * acc * t * t


def _center_range(
    x0: float, vel: float, acc: float, t0: float, t1: float
) -> Tuple[float, float]:
    """Extremal center positions over [t0, t1], including the parabola vertex"""
    candidates = [_position(x0, vel, acc, t0), _position(x0, vel, acc, t1)]
    if acc != 0.0:
        t_vertex = -vel / acc
        if t0 < t_vertex < t1:
            candidates.append(_position(x0, vel, acc, t_vertex))
    return min(candidates), max(candidates)


def footprint_at(obstacle: Obstacle, t: float) -> FrenetRect:
    """Footprint box at a single time instant"""
    s = _position(obstacle.s0, obstacle.s_vel, obstacle.s_acc, t)
    d = _position(obstacle.d0, obstacle.d_vel, obstacle.d_acc, t)
    return FrenetRect(
        s - obstacle.half_length,
        s + obstacle.half_length,
        d - obstacle.half_width,
        d + obstacle.half_width,
    )


def predict_occupancy(obstacle: Obstacle, p: int, step: float) -> FrenetRect:
    """Bounding box of the footprint swept over [theta_p, theta_p+1]"""
    if p < 0:
        raise ValueError(f"step index must be non-negative, got {p}")
    t0, t1 = p * step, (p + 1) * step
    s_lo, s_hi = _center_range(obstacle.s0, obstacle.s_vel, obstacle.s_acc, t0, t1)
    d_lo, d_hi = _center_range(obstacle.d0, obstacle.d_vel, obstacle.d_acc, t0, t1)
    return FrenetRect(
        s_lo - obstacle.half_length,
        s_hi + obstacle.half_length,
        d_lo - obstacle.half_width,
        d_hi + obstacle.half_width,
    )


def occupancy_of(obstacle: Obstacle, p: int, step: float, n: int) -> FrenetRect:
    """Swept box for p < n, instantaneous box at the final time point"""
    if p < n:
        return predict_occupancy(obstacle, p, step)
    return footprint_at(obstacle, n * step)


def occupancy_at(scenario: Scenario, p: int) -> Tuple[FrenetRect, ...]:
    """Occupancy of every obstacle at step p, in scenario order"""
    n = scenario.num_steps
    if not 0 <= p <= n:
        raise ValueError(f"step index {p} outside [0, {n}]")
    return tuple(occupancy_of(o, p, scenario.step, n) for o in scenario.obstacles)


def scenario_to_document(scenario: Scenario) -> Dict[str, Any]:
    """Plain-data form of a validated scenario (explicitly tiled road types)"""
    road = scenario.road
    return {
        "road": {
            "s_begin": road.s_begin,
            "s_end": road.s_end,
            "d_min": road.d_min,
            "d_max": road.d_max,
            "road_types": [
                {"s_lo": i.s_lo, "s_hi": i.s_hi, "type": i.road_type.value}
                for i in road.road_type_intervals
            ],
        },
        "obstacles": [
            {**asdict(o), "kind": o.kind.value} for o in scenario.obstacles
        ],
        "ego": {"s0": scenario.ego_s0, "d0": scenario.ego_d0},
        "horizon": scenario.horizon,
        "step": scenario.step,
        "congested": scenario.congested,
    }


def scenario_digest(scenario: Scenario) -> str:
    canonical = json.dumps(scenario_to_document(scenario), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
