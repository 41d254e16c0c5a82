"""
Exception hierarchy for the maneuver verifier
"""

from typing import Optional


class ManeuverVerifierError(Exception):
    """Base class for every error raised by the verifier"""


class ScenarioParseError(ManeuverVerifierError, ValueError):
    """Scenario document is not well-formed"""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        field_path: Optional[str] = None,
    ):
        self.line = line
        self.field_path = field_path
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field_path:
            location.append(f"field '{field_path}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")


class ScenarioValidationError(ManeuverVerifierError, ValueError):
    """Scenario document is well-formed but violates an invariant"""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class PartitionError(ManeuverVerifierError):
    """Free space-time partitioning failed"""


class GraphError(ManeuverVerifierError):
    """Navigation graph query failed"""


class FormulaSyntaxError(ManeuverVerifierError, ValueError):
    """LTL formula text could not be parsed"""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class EvaluationError(ManeuverVerifierError):
    """Formula cannot be evaluated on the given trace"""


class RuleError(ManeuverVerifierError, ValueError):
    """Rule cannot be instantiated or loaded"""


class ExportError(ManeuverVerifierError):
    """An export target could not be produced"""
