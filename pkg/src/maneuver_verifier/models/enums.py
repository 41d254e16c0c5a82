"""
Enum definitions for the maneuver verifier
"""

from enum import Enum


class RoadType(Enum):
    """Road types a free-space cell can lie on"""

    CARRIAGEWAY = "carriageway"
    PEDESTRIAN_CROSSWALK = "pedestrian_crosswalk"

    @property
    def short(self) -> str:
        return "cw" if self is RoadType.CARRIAGEWAY else "pc"

    @property
    def atom(self) -> str:
        return f"R_{self.short}"

    @classmethod
    def parse(cls, value: str) -> "RoadType":
        for member in cls:
            if value in (member.value, member.short):
                return member
        raise ValueError(f"Unknown road type: {value}")


class ObstacleKind(Enum):
    """Traffic participant types"""

    VEHICLE = "vehicle"
    PEDESTRIAN = "pedestrian"
    CYCLIST = "cyclist"
    RAILBORNE = "railborne"


class Relation(Enum):
    """Position of the free space relative to one obstacle"""

    FRONT = "f"
    BEHIND = "b"
    LEFT = "l"
    RIGHT = "r"

    def atom(self, obstacle_id: str) -> str:
        return f"{self.value}_{obstacle_id}"


class Command(Enum):
    """CLI commands"""

    PARTITION = "partition"
    GRAPH = "graph"
    ENUMERATE = "enumerate"
    VERIFY = "verify"
    ENVELOPE = "envelope"
    PLOT = "plot"
    EXPORT_SMV = "export-smv"
