import random

import pytest

from maneuver_verifier.errors import FormulaSyntaxError
from maneuver_verifier.ltl import (
    FALSE,
    TRUE,
    And,
    Atom,
    Finally,
    Globally,
    Implies,
    Next,
    Not,
    Or,
    Until,
    atoms_of,
    parse,
    to_string,
)
from maneuver_verifier.ltl.formula import depth
from maneuver_verifier.ltl.parser import tokenize

a, b, c, d = Atom("a"), Atom("b"), Atom("c"), Atom("d")


def random_formula(rng: random.Random, max_depth: int, atoms=("a", "b", "c")):
    if max_depth <= 1 or rng.random() < 0.25:
        choice = rng.random()
        if choice < 0.05:
            return rng.choice([TRUE, FALSE])
        return Atom(rng.choice(atoms))
    unary = [Not, Next, Globally, Finally]
    binary = [And, Or, Implies, Until]
    if rng.random() < 0.4:
        return rng.choice(unary)(random_formula(rng, max_depth - 1, atoms))
    return rng.choice(binary)(
        random_formula(rng, max_depth - 1, atoms),
        random_formula(rng, max_depth - 1, atoms),
    )


class TestTokenize:
    def test_positions(self):
        tokens = tokenize("G !(b_v & X r_v)")
        assert [(t.kind, t.position) for t in tokens] == [
            ("G", 0),
            ("!", 2),
            ("(", 3),
            ("atom", 4),
            ("&", 8),
            ("X", 10),
            ("atom", 12),
            (")", 15),
        ]

    def test_keywords_need_word_boundaries(self):
        kinds = [t.kind for t in tokenize("Xa X a GF U_1")]
        assert kinds == ["atom", "X", "atom", "atom", "atom"]


class TestPrecedence:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("!a & b", And(Not(a), b)),
            ("a & b | c", Or(And(a, b), c)),
            ("a | b & c", Or(a, And(b, c))),
            ("a | b -> c", Implies(Or(a, b), c)),
            ("a -> b -> c", Implies(a, Implies(b, c))),
            ("a U b U c", Until(a, Until(b, c))),
            ("a U b & c", And(Until(a, b), c)),
            ("X a U b", Until(Next(a), b)),
            ("G !a", Globally(Not(a))),
            ("F G a", Finally(Globally(a))),
            ("a & b & c", And(And(a, b), c)),
            ("a | b | c", Or(Or(a, b), c)),
            ("!(a -> b)", Not(Implies(a, b))),
            ("true -> FALSE", Implies(TRUE, FALSE)),
        ],
    )
    def test_examples(self, text, expected):
        assert parse(text) == expected

    def test_rule_shape(self):
        formula = parse("!CONGESTED -> G !(b_v & X(b_v U r_v U f_v))")
        b_v, r_v, f_v = Atom("b_v"), Atom("r_v"), Atom("f_v")
        assert formula == Implies(
            Not(Atom("CONGESTED")),
            Globally(Not(And(b_v, Next(Until(b_v, Until(r_v, f_v)))))),
        )
        assert atoms_of(formula) == {"CONGESTED", "b_v", "r_v", "f_v"}

    def test_unicode_aliases(self):
        assert parse("¬a ∧ b ∨ c → d") == parse("!a & b | c -> d")


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "text, position, fragment",
        [
            ("", 0, "empty formula"),
            ("   ", 0, "empty formula"),
            ("a &", 3, "end of input"),
            ("(a", 2, "expected ')'"),
            ("a b", 2, "expected end of formula"),
            ("a $ b", 2, "unknown token '$'"),
            (")", 0, "expected atom"),
            ("a -> ", 5, "end of input"),
            ("a > b", 2, "unknown token '>'"),
        ],
    )
    def test_reports_position(self, text, position, fragment):
        with pytest.raises(FormulaSyntaxError) as err:
            parse(text)
        assert err.value.position == position
        assert fragment in str(err.value)
        assert str(err.value).endswith(f"at position {position}")


class TestPrinter:
    def test_fully_parenthesized(self):
        formula = parse("!CONGESTED -> G !(b & X(b U r U f))")
        assert to_string(formula) == "(!CONGESTED -> G !(b & X (b U (r U f))))"

    def test_constants_print_upper_case(self):
        assert to_string(parse("true & false")) == "(TRUE & FALSE)"

    def test_round_trip(self):
        rng = random.Random(17)
        for _ in range(2000):
            formula = random_formula(rng, rng.randint(1, 6))
            assert parse(to_string(formula)) == formula

    def test_depth(self):
        assert depth(a) == 1
        assert depth(parse("G (a U X b)")) == 4
