"""
Recursive-descent parser for LTL formulas

Precedence, tightest first: unary {!, X, G, F}, then U, &, |, ->.
U and -> associate to the right; & and | to the left.
"""

import re
from dataclasses import dataclass
from typing import List, Optional

from maneuver_verifier.errors import FormulaSyntaxError
from maneuver_verifier.ltl.formula import (
    FALSE,
    TRUE,
    And,
    Atom,
    Finally,
    Formula,
    Globally,
    Implies,
    Next,
    Not,
    Or,
    Until,
)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

SYMBOLS = {
    "->": "->",
    "→": "->",
    "!": "!",
    "¬": "!",
    "&": "&",
    "∧": "&",
    "|": "|",
    "∨": "|",
    "(": "(",
    ")": ")",
}
KEYWORDS = {"X", "U", "G", "F"}
CONSTANTS = {"true": TRUE, "TRUE": TRUE, "false": FALSE, "FALSE": FALSE}
UNARY = {"!": Not, "X": Next, "G": Globally, "F": Finally}


@dataclass(frozen=True)
class Token:
    kind: str  # "atom", "const" or the operator symbol
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        if text.startswith("->", i):
            tokens.append(Token("->", "->", i))
            i += 2
            continue
        if text[i] in SYMBOLS:
            tokens.append(Token(SYMBOLS[text[i]], text[i], i))
            i += 1
            continue
        match = IDENTIFIER.match(text, i)
        if match is None:
            raise FormulaSyntaxError(f"unknown token {text[i]!r}", i)
        word = match.group()
        if word in KEYWORDS:
            kind = word
        elif word in CONSTANTS:
            kind = "const"
        else:
            kind = "atom"
        tokens.append(Token(kind, word, i))
        i = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, kind: str) -> bool:
        token = self.peek()
        if token is not None and token.kind == kind:
            self.index += 1
            return True
        return False

    def error(self, message: str) -> FormulaSyntaxError:
        token = self.peek()
        position = token.position if token is not None else len(self.text)
        found = repr(token.text) if token is not None else "end of input"
        return FormulaSyntaxError(f"{message}, found {found}", position)

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("empty formula", 0)
        formula = self.implication()
        if self.peek() is not None:
            raise self.error("expected end of formula")
        return formula

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.accept("|"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.until()
        while self.accept("&"):
            left = And(left, self.until())
        return left

    def until(self) -> Formula:
        left = self.unary()
        if self.accept("U"):
            return Until(left, self.until())
        return left

    def unary(self) -> Formula:
        token = self.peek()
        if token is not None and token.kind in UNARY:
            self.advance()
            return UNARY[token.kind](self.unary())
        return self.primary()

    def primary(self) -> Formula:
        token = self.peek()
        if token is None:
            raise self.error("expected atom or '('")
        if token.kind == "atom":
            self.advance()
            return Atom(token.text)
        if token.kind == "const":
            self.advance()
            return CONSTANTS[token.text]
        if token.kind == "(":
            self.advance()
            inner = self.implication()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return inner
        raise self.error("expected atom or '('")


def parse(text: str) -> Formula:
    """Parse formula text into an AST"""
    return _Parser(text).parse()
