import random

import numpy as np
import pytest

from maneuver_verifier.core.partition import (
    build_cells,
    generate_abstraction,
    partition_obstacle,
    partition_road_types,
)
from maneuver_verifier.core.scenario import occupancy_at, occupancy_of
from maneuver_verifier.errors import PartitionError, ScenarioValidationError
from maneuver_verifier.geometry import FrenetRect, Region
from maneuver_verifier.models import (
    Obstacle,
    ObstacleKind,
    Relation,
    RoadModel,
    RoadType,
    RoadTypeInterval,
    Scenario,
)


class TestPartitionPrimitives:
    def test_road_types_in_s_order(self, make_scenario):
        scenario = make_scenario(crosswalks=[(20.0, 30.0)])
        parts = partition_road_types(scenario.road)
        assert [rt for rt, _ in parts] == [
            RoadType.CARRIAGEWAY,
            RoadType.PEDESTRIAN_CROSSWALK,
            RoadType.CARRIAGEWAY,
        ]
        assert parts[1][1] == Region.from_bounds(20, 30, -4, 4)

    def test_obstacle_split(self, empty_scenario):
        split = partition_obstacle(FrenetRect(47.5, 52.5, -3, -1), empty_scenario.road)
        assert split[Relation.FRONT] == Region.from_bounds(52.5, 100, -4, 4)
        assert split[Relation.BEHIND] == Region.from_bounds(0, 47.5, -4, 4)
        assert split[Relation.LEFT] == Region.from_bounds(47.5, 52.5, -1, 4)
        assert split[Relation.RIGHT] == Region.from_bounds(47.5, 52.5, -4, -3)

    def test_obstacle_touching_the_road_edge(self, empty_scenario):
        split = partition_obstacle(FrenetRect(10, 20, -4, 0), empty_scenario.road)
        assert split[Relation.RIGHT].is_empty
        assert split[Relation.LEFT].area == pytest.approx(40.0)

    def test_obstacle_beyond_the_road_end(self, empty_scenario):
        split = partition_obstacle(FrenetRect(120, 125, -1, 1), empty_scenario.road)
        assert split[Relation.BEHIND] == Region.from_bounds(0, 100, -4, 4)
        assert split[Relation.FRONT].is_empty
        assert split[Relation.LEFT].is_empty


class TestBuildCells:
    def test_no_obstacles(self, make_scenario):
        scenario = make_scenario(crosswalks=[(20.0, 30.0), (60.0, 70.0)])
        cells = build_cells(scenario, 0)
        assert [str(c.signature) for c in cells] == ["cw:", "pc:"]
        # same-type intervals share one cell
        assert cells[0].region.area == pytest.approx(80 * 8)
        assert cells[1].region.area == pytest.approx(20 * 8)

    def test_overtaking_scene(self, overtaking_scenario):
        cells = build_cells(overtaking_scenario, 2)
        areas = {str(c.signature): c.region.area for c in cells}
        assert areas == pytest.approx(
            {"cw:b": 380.0, "cw:f": 380.0, "cw:l": 25.0, "cw:r": 5.0}
        )

    def test_two_vehicles_side_by_side(self, s1_scenario):
        abstraction = generate_abstraction(s1_scenario)
        for layer in abstraction.layers:
            assert [str(c.signature) for c in layer] == [
                "cw:bb",
                "cw:ff",
                "cw:fr",
                "cw:lb",
            ]
        assert abstraction.cell_count == 20

    def test_uncovered_seed_raises(self):
        road = RoadModel(
            0, 100, -4, 4, (RoadTypeInterval(0, 100, RoadType.CARRIAGEWAY),)
        )
        blocker = Obstacle("v", ObstacleKind.VEHICLE, 5, 1, 50, -2)
        # bypasses validate_scenario on purpose
        scenario = Scenario(road, (blocker,), 50.0, -2.0, 4.0, 1.0)
        with pytest.raises(PartitionError):
            build_cells(scenario, 0)


class TestFiniteAbstraction:
    def test_layers_and_lookup(self, overtaking_scenario):
        abstraction = generate_abstraction(overtaking_scenario)
        assert abstraction.num_steps == 4
        assert abstraction.cells_per_step == [4] * 5
        assert abstraction.cell(3, "cw:l").step == 3
        assert abstraction.cell(3, "cw:ff") is None

    def test_document(self, overtaking_scenario):
        document = generate_abstraction(overtaking_scenario).to_document()
        assert document["num_steps"] == 4
        step = document["steps"][4]
        assert step["time"] == pytest.approx(4.0)
        assert step["occupancy"] == {"v": [47.5, 52.5, -3.0, -1.0]}
        assert [c["signature"] for c in step["cells"]] == [
            "cw:b",
            "cw:f",
            "cw:l",
            "cw:r",
        ]
        assert step["cells"][2]["rects"] == [[47.5, 52.5, -1.0, 4.0]]


# Grid points strictly between multiples of 0.5
ROAD_S, ROAD_D = 30.0, 4.0
S, D = np.meshgrid(
    (np.arange(300) + 0.5) / 10.0,
    -ROAD_D + (np.arange(80) + 0.5) / 10.0,
    indexing="ij",
)


def _mask(region: Region) -> np.ndarray:
    covered = np.zeros(S.shape, dtype=bool)
    for r in region.rects:
        covered |= (S > r.s_lo) & (S < r.s_hi) & (D > r.d_lo) & (D < r.d_hi)
    return covered


def _relation_masks(box: FrenetRect):
    within = (S > box.s_lo) & (S < box.s_hi)
    return {
        Relation.FRONT: S > box.s_hi,
        Relation.BEHIND: S < box.s_lo,
        Relation.LEFT: within & (D > box.d_hi),
        Relation.RIGHT: within & (D < box.d_lo),
    }


def _random_scenario(rng: random.Random, make_scenario):
    obstacles = []
    for i in range(rng.randint(0, 3)):
        half_width = rng.choice([0.5, 1.0, 1.5])
        d0 = rng.choice(np.arange(-ROAD_D + half_width, ROAD_D - half_width + 0.25, 0.5))
        obstacles.append(
            Obstacle(
                id=f"o{i}",
                kind=rng.choice(list(ObstacleKind)),
                half_length=rng.choice([0.5, 1.0, 2.5]),
                half_width=half_width,
                s0=rng.randrange(0, 61) / 2,
                d0=float(d0),
                s_vel=float(rng.randint(-2, 3)),
            )
        )
    step = rng.choice([0.5, 1.0])
    horizon = step * rng.randint(1, 3)

    occupied = np.zeros(S.shape, dtype=bool)
    for box in _boxes_at_zero(obstacles, step, horizon):
        occupied |= (S >= box.s_lo) & (S <= box.s_hi) & (D >= box.d_lo) & (D <= box.d_hi)
    free = np.argwhere(~occupied)
    if not len(free):
        return None
    i, j = free[rng.randrange(len(free))]
    return make_scenario(
        obstacles=obstacles,
        road=(0.0, ROAD_S, -ROAD_D, ROAD_D),
        crosswalks=rng.choice([(), [(10.0, 15.0)], [(5.0, 7.5), (20.0, 25.0)]]),
        ego=(float(S[i, j]), float(D[i, j])),
        horizon=horizon,
        step=step,
    )


def _boxes_at_zero(obstacles, step, horizon):
    n = int(round(horizon / step))
    return [occupancy_of(o, 0, step, n) for o in obstacles]


class TestPartitionAgainstGrid:
    """Cell labels and areas compared with a dense labelling of the road"""

    def test_randomized(self, make_scenario):
        rng = random.Random(31)
        checked = 0
        while checked < 1000:
            try:
                scenario = _random_scenario(rng, make_scenario)
            except ScenarioValidationError:
                continue
            if scenario is None:
                continue
            checked += 1

            road_masks = {rt: np.zeros(S.shape, dtype=bool) for rt in RoadType}
            for rt, region in partition_road_types(scenario.road):
                road_masks[rt] |= _mask(region)
            for p in range(scenario.num_steps + 1):
                boxes = occupancy_at(scenario, p)
                relations = [_relation_masks(box) for box in boxes]
                free = np.ones(S.shape, dtype=bool)
                for box in boxes:
                    free &= ~((S > box.s_lo) & (S < box.s_hi) & (D > box.d_lo) & (D < box.d_hi))

                cells = build_cells(scenario, p)
                assert len({str(c.signature) for c in cells}) == len(cells)
                covered = np.zeros(S.shape, dtype=bool)
                for cell in cells:
                    assert not cell.region.is_empty
                    expected = road_masks[cell.signature.road_type].copy()
                    for masks, relation in zip(relations, cell.signature.relations):
                        expected &= masks[relation]
                    actual = _mask(cell.region)
                    assert np.array_equal(actual, expected), (scenario, p, cell)
                    assert not (covered & actual).any()
                    covered |= actual
                    assert cell.region.area == pytest.approx(actual.sum() / 100.0)
                assert np.array_equal(covered, free)
