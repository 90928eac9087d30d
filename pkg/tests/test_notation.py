"""Tokenizer, parser, and renderer behavior."""

import pytest
from hypothesis import given, strategies as st

from pseudolink import notation
from pseudolink.errors import (
    TooManySlots,
    UnbalancedParenthesis,
    UnexpectedToken,
    UnknownCharacter,
    UnsupportedPolyhedron,
)
from pseudolink.notation import (
    Elementary,
    Kind,
    Polyhedral,
    Product,
    Ramification,
    Reflect,
    Sum,
    Token,
    TokenKind,
    Twist,
    parse,
    render,
    tokenize,
)


def kinds(tokens):
    return [t.kind for t in tokens]


class TestTokenize:
    def test_pseudoknot_word(self):
        tokens = tokenize("3 i 3")
        assert kinds(tokens) == [
            TokenKind.INTEGER, TokenKind.SPACE, TokenKind.PRE, TokenKind.SPACE, TokenKind.INTEGER,
        ]
        assert tokens[0].value == 3 and tokens[-1].value == 3

    def test_polyhedral_shorthand(self):
        tokens = tokenize("6*2:2:2 0")
        assert kinds(tokens) == [
            TokenKind.INTEGER, TokenKind.STAR, TokenKind.INTEGER, TokenKind.COLON,
            TokenKind.INTEGER, TokenKind.COLON, TokenKind.INTEGER, TokenKind.SPACE,
            TokenKind.ZERO,
        ]

    def test_power(self):
        assert kinds(tokenize("i^3")) == [TokenKind.PRE, TokenKind.CARET, TokenKind.INTEGER]

    def test_negative_fuses(self):
        tokens = tokenize("-2 2 0")
        assert tokens[0] == Token(TokenKind.INTEGER, 0, -2)

    def test_minus_before_paren_stays(self):
        assert kinds(tokenize("-(2)"))[0] == TokenKind.MINUS

    def test_spaces_collapse(self):
        assert kinds(tokenize("2   2")) == [TokenKind.INTEGER, TokenKind.SPACE, TokenKind.INTEGER]

    def test_unknown_character(self):
        with pytest.raises(UnknownCharacter):
            tokenize("3 x 3")


class TestParse:
    def test_single_one(self):
        assert parse("1") == Elementary(Kind.POS)

    def test_integer_tangle(self):
        assert parse("3") == Twist(Kind.POS, 3)
        assert parse("-3") == Twist(Kind.NEG, 3)

    def test_power_normalizes(self):
        assert parse("i^1") == Elementary(Kind.PRE)
        assert parse("i^3") == Twist(Kind.PRE, 3)
        assert parse("(-1)^4") == Twist(Kind.NEG, 4)

    def test_product_left_associative(self):
        assert parse("2 1 i") == Product(Product(Twist(Kind.POS, 2), Elementary(Kind.POS)),
                                          Elementary(Kind.PRE))

    def test_precedence_product_sum_comma(self):
        expr = parse("2 1 i,3,-3")
        assert isinstance(expr, Ramification) and len(expr.parts) == 3
        expr = parse("(3),(3),(i^2)+(i^1)")
        assert isinstance(expr.parts[2], Sum)

    def test_ramification_flat(self):
        expr = parse("2,3,4")
        assert isinstance(expr, Ramification) and len(expr.parts) == 3

    def test_parenthesized_ramification_nests(self):
        expr = parse("(i,i,i),3,-3")
        assert isinstance(expr, Ramification)
        assert isinstance(expr.parts[0], Ramification)

    def test_reflection(self):
        assert parse("-(2)") == Reflect(Twist(Kind.POS, 2))
        assert parse("-i") == Reflect(Elementary(Kind.PRE))
        assert parse("-(i,1,1)") == Reflect(
            Ramification((Elementary(Kind.PRE), Elementary(Kind.POS), Elementary(Kind.POS)))
        )

    def test_trailing_zero_is_plain_product(self):
        assert parse("2 0") == Product(Twist(Kind.POS, 2), Elementary(Kind.ZERO))

    def test_colon_shorthand_matches_expansion(self):
        assert parse("6*2:2:2 0") == parse("6*2.1.2.1.2 0.1")
        assert parse("6*2 1.2.3 2:-2 2 0") == parse("6*2 1.2.3 2.1.-2 2 0.1")

    def test_double_colon_elides_three(self):
        assert parse("8*i::i") == parse("8*i.1.1.1.i.1.1.1")

    def test_colon_dot_run(self):
        assert parse("9*.i:.i:.i") == parse("9*1.i.1.1.i.1.1.i.1")

    def test_leading_dot(self):
        expr = parse("9*.i")
        assert isinstance(expr, Polyhedral)
        assert expr.slots[0] == Elementary(Kind.POS)
        assert expr.slots[1] == Elementary(Kind.PRE)

    def test_slots_padded_to_vertex_count(self):
        expr = parse("8*")
        assert isinstance(expr, Polyhedral)
        assert len(expr.slots) == 8
        assert all(s == Elementary(Kind.POS) for s in expr.slots)

    def test_too_many_slots(self):
        with pytest.raises(TooManySlots):
            parse("6*1.1.1.1.1.1.1")

    def test_unsupported_polyhedron(self):
        with pytest.raises(UnsupportedPolyhedron):
            parse("7*2")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(UnbalancedParenthesis):
            parse("(2,3")

    def test_trailing_garbage(self):
        with pytest.raises(UnexpectedToken):
            parse("2 )")

    def test_power_of_composite_rejected(self):
        with pytest.raises(UnexpectedToken):
            parse("(2 2)^3")

    def test_expand_colons_equivalence(self):
        for symbol in ["6*2:2:2 0", "8*i::i", "9*.i:.i:.i", "9*i::::i", "6*2.2 0::i"]:
            assert parse(symbol) == parse(notation.expand_colons(symbol))


class TestRender:
    @pytest.mark.parametrize("symbol, expected", [
        ("6*2:2:2 0", "6*2.1.2.1.2 0.1"),
        ("3 i 3", "3 i 3"),
        ("i,1", "i,1"),
        ("9*.i", "9*1.i.1.1.1.1.1.1.1"),
        ("(3)(i)(-3)", "3 i -3"),
    ])
    def test_unreduced(self, symbol, expected):
        assert render(parse(symbol)) == expected

    @pytest.mark.parametrize("symbol, expected", [
        ("6*2.1.2.1.2 0.1", "6*2:2:2 0"),
        ("9*1.i.1.1.1.1.1.1.1", "9*.i"),
        ("8*i.1.1.1.i.1.1.1", "8*i::i"),
        ("8*1.1.1.1.1.1.1.1", "8*"),
    ])
    def test_reduced(self, symbol, expected):
        assert render(parse(symbol), reduced=True) == expected

    @pytest.mark.parametrize("symbol", [
        "3 i 3", "2 2", "2 1 i,3,-3", "(i,i,i),3,-3", "9*.i", "6*2:2:2 0",
        "8*i::i", "-(i,1,1)", "(i^2)+(i^1)", "45 i 9", "2 1,2 1,-(i,1,1)",
        "6*2 1.2.3 2:-2 2 0", "1", "0", "-1", "i",
    ])
    def test_round_trip(self, symbol):
        expr = parse(symbol)
        assert parse(render(expr)) == expr
        assert parse(render(expr, reduced=True)) == expr


# hypothesis strategy for random tangle expressions
_atoms = st.sampled_from([
    Elementary(Kind.POS), Elementary(Kind.NEG), Elementary(Kind.PRE), Elementary(Kind.ZERO),
    Twist(Kind.POS, 2), Twist(Kind.NEG, 3), Twist(Kind.PRE, 2), Twist(Kind.POS, 5),
])


def _compound(children):
    return st.one_of(
        st.tuples(children, children).map(lambda ab: Product(*ab)),
        st.tuples(children, children).map(lambda ab: Sum(*ab)),
        st.lists(children, min_size=2, max_size=4).map(lambda xs: Ramification(tuple(xs))),
        children.map(Reflect),
    )


expressions = st.recursive(_atoms, _compound, max_leaves=12)


@given(expressions)
def test_round_trip_property(expr):
    text = render(expr)
    assert parse(text) == expr
