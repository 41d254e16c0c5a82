"""
LTL abstract syntax tree and canonical printer
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterator, Union


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Constant:
    value: bool


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class Next:
    operand: "Formula"


@dataclass(frozen=True)
class Globally:
    operand: "Formula"


@dataclass(frozen=True)
class Finally:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Until:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Constant, Not, Next, Globally, Finally, And, Or, Implies, Until]

UNARY_SYMBOLS = {Not: "!", Next: "X", Globally: "G", Finally: "F"}
BINARY_SYMBOLS = {And: "&", Or: "|", Implies: "->", Until: "U"}

TRUE = Constant(True)
FALSE = Constant(False)


def children(formula: Formula) -> tuple:
    if isinstance(formula, (Atom, Constant)):
        return ()
    if isinstance(formula, (Not, Next, Globally, Finally)):
        return (formula.operand,)
    return (formula.left, formula.right)


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Post-order walk; every subformula precedes its parents"""
    for child in children(formula):
        yield from subformulas(child)
    yield formula


def atoms_of(formula: Formula) -> FrozenSet[str]:
    return frozenset(f.name for f in subformulas(formula) if isinstance(f, Atom))


def to_string(formula: Formula) -> str:
    """Fully parenthesized form accepted by both parse() and NuSMV"""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Constant):
        return "TRUE" if formula.value else "FALSE"

    symbol = UNARY_SYMBOLS.get(type(formula))
    if symbol is not None:
        operand = to_string(formula.operand)
        return f"!{operand}" if symbol == "!" else f"{symbol} {operand}"

    symbol = BINARY_SYMBOLS[type(formula)]
    return f"({to_string(formula.left)} {symbol} {to_string(formula.right)})"
