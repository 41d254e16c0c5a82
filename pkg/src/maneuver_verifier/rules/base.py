"""
Rule templates, instantiated rules and the rule registry
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional

import yaml
from pydantic import ValidationError

from maneuver_verifier.errors import FormulaSyntaxError, RuleError
from maneuver_verifier.ltl.formula import Formula, atoms_of, to_string
from maneuver_verifier.ltl.parser import parse
from maneuver_verifier.models.data_classes import Scenario
from maneuver_verifier.models.enums import ObstacleKind
from maneuver_verifier.schemas.scenario_schemas import RulesDocument

logger = logging.getLogger(__name__)

PLACEHOLDER = "{o}"
SCENE = "scene"
OBSTACLE_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RuleSpec:
    """A rule instantiated for one obstacle (or for the whole scene)"""

    name: str
    formula: Formula
    applies_to: str
    obstacle_id: Optional[str] = None

    @property
    def atoms(self) -> FrozenSet[str]:
        return atoms_of(self.formula)

    def __str__(self) -> str:
        return f"{self.name}: {to_string(self.formula)}"


@dataclass(frozen=True)
class RuleTemplate:
    """Formula text with an {o} placeholder for the obstacle id"""

    name: str
    applies_to: str
    formula: str

    def __post_init__(self):
        allowed = {kind.value for kind in ObstacleKind} | {SCENE}
        if self.applies_to not in allowed:
            raise RuleError(
                f"rule {self.name}: applies_to must be one of {sorted(allowed)}"
            )
        if self.applies_to == SCENE and PLACEHOLDER in self.formula:
            raise RuleError(f"rule {self.name}: scene rules cannot use {PLACEHOLDER}")
        # surface syntax errors at registration time
        self._parse("o")

    def _parse(self, obstacle_id: str) -> Formula:
        try:
            return parse(self.formula.replace(PLACEHOLDER, obstacle_id))
        except FormulaSyntaxError as e:
            raise RuleError(f"rule {self.name}: {e}") from e

    def instantiate(
        self, obstacle_id: Optional[str] = None, kind: Optional[ObstacleKind] = None
    ) -> RuleSpec:
        if self.applies_to == SCENE:
            return RuleSpec(self.name, self._parse(""), SCENE)

        if obstacle_id is None or not OBSTACLE_ID.match(obstacle_id):
            raise RuleError(f"rule {self.name}: invalid obstacle id {obstacle_id!r}")
        if kind is not None and kind.value != self.applies_to:
            raise RuleError(
                f"rule {self.name} applies to {self.applies_to}, "
                f"but {obstacle_id} is a {kind.value}"
            )
        return RuleSpec(
            f"{self.name}({obstacle_id})",
            self._parse(obstacle_id),
            self.applies_to,
            obstacle_id,
        )


class RuleRegistry:
    """Registry of rule templates, kept in registration order"""

    def __init__(self):
        self.templates: Dict[str, RuleTemplate] = {}

    def register(self, template: RuleTemplate):
        if template.name in self.templates:
            raise RuleError(f"rule {template.name} is already registered")
        self.templates[template.name] = template
        logger.debug(f"Registered rule: {template.name}")

    def list_rules(self) -> List[str]:
        return list(self.templates)

    def rules_for(self, scenario: Scenario) -> List[RuleSpec]:
        """Per obstacle in scenario order, then templates in registration order; scene rules last"""
        rules = []
        for obstacle in scenario.obstacles:
            for template in self.templates.values():
                if template.applies_to == obstacle.kind.value:
                    rules.append(template.instantiate(obstacle.id, obstacle.kind))
        for template in self.templates.values():
            if template.applies_to == SCENE:
                rules.append(template.instantiate())
        return rules


def load_rules_file(path: str) -> List[RuleTemplate]:
    """Read user rule templates from a YAML list (or a mapping with a 'rules' key)"""

    try:
        data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        raise RuleError(f"malformed rules file {path}: {e}") from e

    if isinstance(data, dict):
        data = data.get("rules")
    try:
        document = RulesDocument.from_entries(data)
    except ValidationError as e:
        raise RuleError(f"invalid rules file {path}: {e.errors()[0]['msg']}") from e

    templates = [RuleTemplate(r.name, r.applies_to, r.formula) for r in document.rules]
    logger.info(f"Loaded {len(templates)} rules from {path}")
    return templates
