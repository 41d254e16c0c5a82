"""
Shared scenario builders for the test suite
"""

from typing import Sequence, Tuple

import pytest
import yaml

from maneuver_verifier.core.scenario import scenario_to_document, validate_scenario
from maneuver_verifier.models import (
    Obstacle,
    ObstacleKind,
    RoadModel,
    RoadType,
    RoadTypeInterval,
    Scenario,
)


def _road(
    s_begin: float,
    s_end: float,
    d_min: float,
    d_max: float,
    crosswalks: Sequence[Tuple[float, float]],
) -> RoadModel:
    intervals = []
    cursor = s_begin
    for lo, hi in sorted(crosswalks):
        if cursor < lo:
            intervals.append(RoadTypeInterval(cursor, lo, RoadType.CARRIAGEWAY))
        intervals.append(RoadTypeInterval(lo, hi, RoadType.PEDESTRIAN_CROSSWALK))
        cursor = hi
    if cursor < s_end:
        intervals.append(RoadTypeInterval(cursor, s_end, RoadType.CARRIAGEWAY))
    return RoadModel(s_begin, s_end, d_min, d_max, tuple(intervals))


@pytest.fixture
def make_scenario():
    """Factory for validated scenarios on a straight road"""

    def build(
        obstacles: Sequence[Obstacle] = (),
        road: Tuple[float, float, float, float] = (0.0, 100.0, -4.0, 4.0),
        crosswalks: Sequence[Tuple[float, float]] = (),
        ego: Tuple[float, float] = (10.0, -2.0),
        horizon: float = 4.0,
        step: float = 1.0,
        congested: bool = False,
    ) -> Scenario:
        return validate_scenario(
            Scenario(
                road=_road(*road, crosswalks),
                obstacles=tuple(obstacles),
                ego_s0=ego[0],
                ego_d0=ego[1],
                horizon=horizon,
                step=step,
                congested=congested,
            )
        )

    return build


@pytest.fixture
def vehicle():
    def build(obstacle_id: str = "v", **kwargs) -> Obstacle:
        params = dict(half_length=2.5, half_width=1.0, s0=50.0, d0=-2.0)
        params.update(kwargs)
        return Obstacle(id=obstacle_id, kind=ObstacleKind.VEHICLE, **params)

    return build


@pytest.fixture
def empty_scenario(make_scenario):
    return make_scenario()


@pytest.fixture
def overtaking_scenario(make_scenario, vehicle):
    """Static vehicle in the right lane, ego approaching from behind"""
    return make_scenario(obstacles=[vehicle("v")])


@pytest.fixture
def s1_scenario(make_scenario):
    """Two vehicles side by side, one per lane, both driving at 4 m/s"""
    right = Obstacle(
        id="o1",
        kind=ObstacleKind.VEHICLE,
        half_length=2.5,
        half_width=2.0,
        s0=30.0,
        d0=-2.0,
        s_vel=4.0,
    )
    left = Obstacle(
        id="o2",
        kind=ObstacleKind.VEHICLE,
        half_length=2.5,
        half_width=2.0,
        s0=34.5,
        d0=2.0,
        s_vel=4.0,
    )
    return make_scenario(obstacles=[right, left], road=(0.0, 150.0, -4.0, 4.0))


@pytest.fixture
def crosswalk_scenario(make_scenario):
    """Ego already on the crosswalk in front of a crossing pedestrian"""
    pedestrian = Obstacle(
        id="p",
        kind=ObstacleKind.PEDESTRIAN,
        half_length=0.5,
        half_width=0.5,
        s0=42.0,
        d0=-3.5,
        d_vel=1.0,
    )
    return make_scenario(
        obstacles=[pedestrian], crosswalks=[(40.0, 50.0)], ego=(46.0, -2.0)
    )


@pytest.fixture
def stopped_at_crosswalk_scenario(make_scenario, vehicle):
    """
    Vehicle stopped in the right lane just before a crosswalk, a pedestrian
    standing on the crosswalk in the left lane and the ego alongside the vehicle
    """
    pedestrian = Obstacle(
        id="p",
        kind=ObstacleKind.PEDESTRIAN,
        half_length=0.5,
        half_width=0.5,
        s0=54.5,
        d0=3.0,
    )
    return make_scenario(
        obstacles=[vehicle("v"), pedestrian],
        crosswalks=[(52.5, 56.5)],
        ego=(50.0, 2.5),
    )


@pytest.fixture
def write_scenario(tmp_path):
    """Write a scenario as a YAML document and return its path"""

    def write(scenario: Scenario, name: str = "scenario.yaml") -> str:
        path = tmp_path / name
        path.write_text(
            yaml.safe_dump(scenario_to_document(scenario), sort_keys=False),
            encoding="utf-8",
        )
        return str(path)

    return write
