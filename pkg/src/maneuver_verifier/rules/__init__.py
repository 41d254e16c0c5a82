"""
Traffic rules and the semantic proposition set
"""

from .base import RuleRegistry, RuleSpec, RuleTemplate, load_rules_file
from .traffic_rules import (
    BUILTIN_RULES,
    R1,
    R2,
    R3,
    default_registry,
    rule_r1,
    rule_r2,
    rule_r3,
    rules_for,
)
from .valuation import CONGESTED, proposition_set, trace_from_path, valuation_of

__all__ = [
    "BUILTIN_RULES",
    "CONGESTED",
    "R1",
    "R2",
    "R3",
    "RuleRegistry",
    "RuleSpec",
    "RuleTemplate",
    "default_registry",
    "load_rules_file",
    "proposition_set",
    "rule_r1",
    "rule_r2",
    "rule_r3",
    "rules_for",
    "trace_from_path",
    "valuation_of",
]
