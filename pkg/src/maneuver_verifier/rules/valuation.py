"""
Mapping from cells and paths to valuations over the semantic propositions
"""

from typing import Dict, Optional, Sequence, Tuple

from maneuver_verifier.ltl.evaluator import SemanticTrace
from maneuver_verifier.models.data_classes import Cell, Path, Scenario
from maneuver_verifier.models.enums import Relation, RoadType

CONGESTED = "CONGESTED"

RELATIONS = (Relation.FRONT, Relation.BEHIND, Relation.LEFT, Relation.RIGHT)


def proposition_set(obstacle_ids: Sequence[str]) -> Tuple[str, ...]:
    """f/b/l/r per obstacle, then the road atoms and CONGESTED"""
    atoms = [relation.atom(oid) for oid in obstacle_ids for relation in RELATIONS]
    atoms.extend(road_type.atom for road_type in RoadType)
    atoms.append(CONGESTED)
    return tuple(atoms)


def valuation_of(
    cell: Cell, congested: bool, obstacle_ids: Sequence[str]
) -> Dict[str, bool]:
    relations = cell.signature.relations
    if len(relations) != len(obstacle_ids):
        raise ValueError(
            f"signature {cell.signature} has {len(relations)} letters "
            f"for {len(obstacle_ids)} obstacles"
        )

    valuation = {}
    for oid, letter in zip(obstacle_ids, relations):
        for relation in RELATIONS:
            valuation[relation.atom(oid)] = relation is letter
    for road_type in RoadType:
        valuation[road_type.atom] = road_type is cell.signature.road_type
    valuation[CONGESTED] = congested
    return valuation


def trace_from_path(
    path: Path, scenario: Scenario, congested: Optional[bool] = None
) -> SemanticTrace:
    if congested is None:
        congested = scenario.congested
    ids = [o.id for o in scenario.obstacles]
    return SemanticTrace.from_valuations(
        [valuation_of(cell, congested, ids) for cell in path],
        atoms=proposition_set(ids),
    )
