"""
Linear temporal logic: formulas, parser and stutter-semantics evaluator
"""

from .evaluator import SemanticTrace, evaluate, first_violation, truth_table
from .formula import (
    FALSE,
    TRUE,
    And,
    Atom,
    Constant,
    Finally,
    Formula,
    Globally,
    Implies,
    Next,
    Not,
    Or,
    Until,
    atoms_of,
    to_string,
)
from .parser import parse

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Atom",
    "Constant",
    "Finally",
    "Formula",
    "Globally",
    "Implies",
    "Next",
    "Not",
    "Or",
    "SemanticTrace",
    "Until",
    "atoms_of",
    "evaluate",
    "first_violation",
    "parse",
    "to_string",
    "truth_table",
]
