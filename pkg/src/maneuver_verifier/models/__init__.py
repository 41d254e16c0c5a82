"""
Models package for the maneuver verifier
"""

from .data_classes import (
    Cell,
    ManeuverEnvelope,
    Obstacle,
    Path,
    RoadModel,
    RoadTypeInterval,
    Scenario,
    Signature,
)
from .enums import Command, ObstacleKind, Relation, RoadType

__all__ = [
    "Cell",
    "Command",
    "ManeuverEnvelope",
    "Obstacle",
    "ObstacleKind",
    "Path",
    "Relation",
    "RoadModel",
    "RoadType",
    "RoadTypeInterval",
    "Scenario",
    "Signature",
]
