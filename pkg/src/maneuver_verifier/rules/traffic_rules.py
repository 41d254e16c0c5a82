"""
Overtaking and pedestrian-priority rules from the Vienna Convention
"""

from typing import List, Optional

from maneuver_verifier.errors import RuleError
from maneuver_verifier.models.data_classes import Scenario
from maneuver_verifier.models.enums import ObstacleKind
from maneuver_verifier.rules.base import RuleRegistry, RuleSpec, RuleTemplate

# Overtake on the left, unless traffic is congested
R1 = RuleTemplate(
    name="R1",
    applies_to=ObstacleKind.VEHICLE.value,
    formula="!CONGESTED -> G !(b_{o} & X(b_{o} U r_{o} U f_{o}))",
)

# No overtaking that ends on a pedestrian crosswalk
R2 = RuleTemplate(
    name="R2",
    applies_to=ObstacleKind.VEHICLE.value,
    formula="G !(b_{o} & X(b_{o} U l_{o} U (f_{o} & R_pc)))",
)

# Never be in front of a pedestrian while on the crosswalk
R3 = RuleTemplate(
    name="R3",
    applies_to=ObstacleKind.PEDESTRIAN.value,
    formula="G !(R_pc & f_{o})",
)

BUILTIN_RULES = (R1, R2, R3)


def _for_obstacle(
    template: RuleTemplate, scenario: Scenario, obstacle_id: str
) -> RuleSpec:
    try:
        obstacle = scenario.obstacle(obstacle_id)
    except KeyError:
        raise RuleError(
            f"rule {template.name}: no obstacle {obstacle_id!r} in the scenario"
        ) from None
    return template.instantiate(obstacle.id, obstacle.kind)


def rule_r1(scenario: Scenario, vehicle_id: str) -> RuleSpec:
    return _for_obstacle(R1, scenario, vehicle_id)


def rule_r2(scenario: Scenario, vehicle_id: str) -> RuleSpec:
    return _for_obstacle(R2, scenario, vehicle_id)


def rule_r3(scenario: Scenario, pedestrian_id: str) -> RuleSpec:
    return _for_obstacle(R3, scenario, pedestrian_id)


def default_registry(extra: Optional[List[RuleTemplate]] = None) -> RuleRegistry:
    registry = RuleRegistry()
    for template in BUILTIN_RULES:
        registry.register(template)
    for template in extra or []:
        registry.register(template)
    return registry


def rules_for(scenario: Scenario) -> List[RuleSpec]:
    """R1, R2 per vehicle and R3 per pedestrian, in obstacle order"""
    return default_registry().rules_for(scenario)
