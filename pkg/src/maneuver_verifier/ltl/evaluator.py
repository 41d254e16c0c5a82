"""
Evaluation of LTL formulas over stutter-extended finite traces

A finite trace denotes the infinite trace that repeats its last valuation
forever. Each subformula gets a truth table over the trace positions, filled
from the last position backwards; at the last position the temporal
operators collapse (X p = G p = F p = p, p U q = q).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from maneuver_verifier.errors import EvaluationError
from maneuver_verifier.ltl.formula import (
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
    subformulas,
)

Table = Tuple[bool, ...]


@dataclass(frozen=True)
class SemanticTrace:
    """Finite sequence of total valuations over an ordered atom set"""

    atoms: Tuple[str, ...]
    states: Tuple[Tuple[bool, ...], ...]

    def __post_init__(self):
        if not self.states:
            raise EvaluationError("a trace needs at least one valuation")
        if len(set(self.atoms)) != len(self.atoms):
            raise EvaluationError("duplicate atoms in trace")
        for i, state in enumerate(self.states):
            if len(state) != len(self.atoms):
                raise EvaluationError(f"valuation {i} is not total over the atoms")

    @classmethod
    def from_valuations(
        cls,
        valuations: Sequence[Mapping[str, bool]],
        atoms: Optional[Iterable[str]] = None,
    ) -> "SemanticTrace":
        if atoms is None:
            atoms = sorted(valuations[0]) if valuations else ()
        atoms = tuple(atoms)
        try:
            states = tuple(tuple(bool(v[a]) for a in atoms) for v in valuations)
        except KeyError as e:
            raise EvaluationError(f"valuation is missing atom {e.args[0]!r}") from e
        return cls(atoms, states)

    def __len__(self) -> int:
        return len(self.states)

    def column(self, atom: str) -> Table:
        try:
            j = self.atoms.index(atom)
        except ValueError:
            raise EvaluationError(f"unknown atom {atom!r}") from None
        return tuple(state[j] for state in self.states)

    def valuation(self, i: int) -> Dict[str, bool]:
        return dict(zip(self.atoms, self.states[i]))

    def project(self, atoms: Iterable[str]) -> "SemanticTrace":
        """Restrict to a subset of atoms, keeping this trace's atom order"""
        wanted = set(atoms)
        missing = wanted - set(self.atoms)
        if missing:
            raise EvaluationError(f"unknown atoms {sorted(missing)}")
        keep = [j for j, a in enumerate(self.atoms) if a in wanted]
        return SemanticTrace(
            tuple(self.atoms[j] for j in keep),
            tuple(tuple(state[j] for j in keep) for state in self.states),
        )

    def extend_stutter(self, count: int = 1) -> "SemanticTrace":
        return SemanticTrace(self.atoms, self.states + (self.states[-1],) * count)


def _table(formula: Formula, trace: SemanticTrace, cache: Dict[Formula, Table]) -> Table:
    n = len(trace)

    if isinstance(formula, Atom):
        return trace.column(formula.name)
    if isinstance(formula, Constant):
        return (formula.value,) * n

    if isinstance(formula, Not):
        return tuple(not v for v in cache[formula.operand])
    if isinstance(formula, And):
        return tuple(a and b for a, b in zip(cache[formula.left], cache[formula.right]))
    if isinstance(formula, Or):
        return tuple(a or b for a, b in zip(cache[formula.left], cache[formula.right]))
    if isinstance(formula, Implies):
        return tuple(
            (not a) or b for a, b in zip(cache[formula.left], cache[formula.right])
        )
    if isinstance(formula, Next):
        operand = cache[formula.operand]
        return operand[1:] + operand[-1:]

    out: List[bool] = [False] * n
    if isinstance(formula, Globally):
        operand = cache[formula.operand]
        out[-1] = operand[-1]
        for i in range(n - 2, -1, -1):
            out[i] = operand[i] and out[i + 1]
    elif isinstance(formula, Finally):
        operand = cache[formula.operand]
        out[-1] = operand[-1]
        for i in range(n - 2, -1, -1):
            out[i] = operand[i] or out[i + 1]
    elif isinstance(formula, Until):
        left, right = cache[formula.left], cache[formula.right]
        out[-1] = right[-1]
        for i in range(n - 2, -1, -1):
            out[i] = right[i] or (left[i] and out[i + 1])
    else:
        raise EvaluationError(f"unsupported formula node {type(formula).__name__}")
    return tuple(out)


def truth_table(formula: Formula, trace: SemanticTrace) -> Table:
    """Truth value of the formula at every (0-based) instant of the trace"""
    cache: Dict[Formula, Table] = {}
    for sub in subformulas(formula):
        if sub not in cache:
            cache[sub] = _table(sub, trace, cache)
    return cache[formula]


def evaluate(formula: Formula, trace: SemanticTrace, i: int = 0) -> bool:
    if not 0 <= i < len(trace):
        raise EvaluationError(f"instant {i} outside trace of length {len(trace)}")
    return truth_table(formula, trace)[i]


def first_violation(formula: Formula, trace: SemanticTrace) -> Optional[int]:
    """
    Earliest 0-based instant explaining why the formula fails at instant 0

    Implications whose antecedent holds are reduced to their consequent;
    for a G-formula the answer is the first instant where its body is false.
    Returns None when the formula holds.
    """

    if evaluate(formula, trace):
        return None
    while isinstance(formula, Implies) and evaluate(formula.left, trace):
        formula = formula.right
    if isinstance(formula, Globally):
        body = truth_table(formula.operand, trace)
        return next(i for i, value in enumerate(body) if not value)
    return 0
