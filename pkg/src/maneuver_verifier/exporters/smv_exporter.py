"""
SMV model writer for cross-checking traces with an external model checker

The model has one step counter that stops at the last state, so its single
execution is the stutter extension of the trace. Each atom is a boolean
variable defined by a case over the step counter.
"""

from typing import List, Sequence

from maneuver_verifier.ltl.evaluator import SemanticTrace
from maneuver_verifier.ltl.formula import to_string
from maneuver_verifier.exporters.base import BaseExporter
from maneuver_verifier.rules.base import RuleSpec


def _bool(value: bool) -> str:
    return "TRUE" if value else "FALSE"


class SmvExporter(BaseExporter):
    extension = ".smv"

    def __init__(self, rules: Sequence[RuleSpec]):
        self.rules = list(rules)

    def render(self, payload: SemanticTrace) -> str:
        last = len(payload) - 1
        lines: List[str] = ["MODULE main", "VAR", f"  step : 0..{last};"]
        lines.extend(f"  {atom} : boolean;" for atom in payload.atoms)

        lines.append("ASSIGN")
        lines.append("  init(step) := 0;")
        lines.append("  next(step) := case")
        lines.append(f"    step < {last} : step + 1;")
        lines.append("    TRUE : step;")
        lines.append("  esac;")
        for j, atom in enumerate(payload.atoms):
            lines.append(f"  {atom} := case")
            for i, state in enumerate(payload.states[:-1]):
                lines.append(f"    step = {i} : {_bool(state[j])};")
            lines.append(f"    TRUE : {_bool(payload.states[-1][j])};")
            lines.append("  esac;")

        for rule in self.rules:
            lines.append(f"-- {rule.name}")
            lines.append(f"LTLSPEC {to_string(rule.formula)}")
        return "\n".join(lines) + "\n"
