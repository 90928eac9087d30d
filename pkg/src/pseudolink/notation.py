"""Tokenizer, parser, and renderer for extended Conway notation.

The notation describes tangles built from the elementary tangles 0, 1, -1
and the precrossing tangle i, combined by juxtaposition-product ("2 1 i"),
sum ("+"), and comma-ramification, plus polyhedral forms such as
"6*2.1.2.1.2 0.1" with their colon shorthand "6*2:2:2 0".

Operator precedence, tightest first: atom / "-" prefix / "^" power, then
product, then sum, then ramification.  A "-" directly before digits fuses
into a negative integer; before "(" or "i" it becomes the reflection
operator.  Powers build twists: "i^3" is the 3-twist of precrossings.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .errors import (
    TooManySlots,
    UnbalancedParenthesis,
    UnexpectedToken,
    UnknownCharacter,
)


class TokenKind(enum.Enum):
    INTEGER = "INTEGER"
    ZERO = "ZERO"
    PRE = "PRE"
    STAR = "STAR"
    DOT = "DOT"
    COLON = "COLON"
    COMMA = "COMMA"
    PLUS = "PLUS"
    MINUS = "MINUS"
    CARET = "CARET"
    LPAREN = "LPAREN"
    RPAREN = "RPAREN"
    SPACE = "SPACE"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    pos: int
    value: int = 0

    def __repr__(self) -> str:  # compact, for parser error messages
        if self.kind is TokenKind.INTEGER:
            return f"INT({self.value})"
        return self.kind.name


_DIGITS = re.compile(r"[0-9]+")

_SINGLE = {
    "*": TokenKind.STAR,
    ".": TokenKind.DOT,
    ":": TokenKind.COLON,
    ",": TokenKind.COMMA,
    "+": TokenKind.PLUS,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


def tokenize(source: str) -> list[Token]:
    """Turn a Conway symbol string into a token list.

    Runs of whitespace collapse to a single SPACE token (whitespace is the
    product operator, so it is significant).  A "-" immediately followed by
    a nonzero integer fuses into a negative INTEGER token.
    """
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            if tokens and tokens[-1].kind is not TokenKind.SPACE:
                tokens.append(Token(TokenKind.SPACE, i))
            i += 1
            continue
        if ch.isdigit():
            m = _DIGITS.match(source, i)
            assert m is not None
            text = m.group()
            value = int(text)
            if value == 0:
                tokens.append(Token(TokenKind.ZERO, i))
            else:
                tokens.append(Token(TokenKind.INTEGER, i, value))
            i = m.end()
            continue
        if ch == "-":
            m = _DIGITS.match(source, i + 1)
            if m is not None and int(m.group()) != 0:
                tokens.append(Token(TokenKind.INTEGER, i, -int(m.group())))
                i = m.end()
                continue
            tokens.append(Token(TokenKind.MINUS, i))
            i += 1
            continue
        if ch == "i":
            tokens.append(Token(TokenKind.PRE, i))
            i += 1
            continue
        kind = _SINGLE.get(ch)
        if kind is None:
            raise UnknownCharacter(f"unknown character {ch!r}", i)
        tokens.append(Token(kind, i))
        i += 1
    # a leading SPACE can never be produced; strip a trailing one
    while tokens and tokens[-1].kind is TokenKind.SPACE:
        tokens.pop()
    return tokens


# ---------------------------------------------------------------------------
# Abstract syntax


class Kind(enum.Enum):
    ZERO = "0"
    POS = "1"
    NEG = "-1"
    PRE = "i"


@dataclass(frozen=True)
class Elementary:
    kind: Kind


@dataclass(frozen=True)
class Twist:
    kind: Kind  # POS, NEG, or PRE; never ZERO
    count: int  # always >= 2 (a 1-twist normalizes to Elementary)


@dataclass(frozen=True)
class Product:
    left: "ConwayExpr"
    right: "ConwayExpr"


@dataclass(frozen=True)
class Sum:
    left: "ConwayExpr"
    right: "ConwayExpr"


@dataclass(frozen=True)
class Ramification:
    parts: tuple["ConwayExpr", ...]  # length >= 2, flat


@dataclass(frozen=True)
class Reflect:
    inner: "ConwayExpr"


@dataclass(frozen=True)
class Polyhedral:
    vertex_count: int
    poly_index: int
    slots: tuple["ConwayExpr", ...] = field(default=())

    def key(self) -> str:
        return f"{self.vertex_count}{'*' * self.poly_index}"


ConwayExpr = Elementary | Twist | Product | Sum | Ramification | Reflect | Polyhedral

ONE = Elementary(Kind.POS)


def make_twist(kind: Kind, count: int) -> ConwayExpr:
    if count < 1:
        raise ValueError("twist count must be >= 1")
    if count == 1:
        return Elementary(kind)
    return Twist(kind, count)


def integer_tangle(value: int) -> ConwayExpr:
    """The integer tangle n: a horizontal chain of |n| identical crossings."""
    if value == 0:
        return Elementary(Kind.ZERO)
    return make_twist(Kind.POS if value > 0 else Kind.NEG, abs(value))


# ---------------------------------------------------------------------------
# Parser

_ATOM_STARTERS = frozenset(
    {TokenKind.INTEGER, TokenKind.ZERO, TokenKind.PRE, TokenKind.LPAREN, TokenKind.MINUS}
)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> Token | None:
        j = self.pos + offset
        return self.tokens[j] if j < len(self.tokens) else None

    def next_nonspace(self) -> Token | None:
        j = self.pos
        while j < len(self.tokens) and self.tokens[j].kind is TokenKind.SPACE:
            j += 1
        return self.tokens[j] if j < len(self.tokens) else None

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def skip_spaces(self) -> None:
        while (t := self.peek()) is not None and t.kind is TokenKind.SPACE:
            self.pos += 1

    def expect(self, kind: TokenKind) -> Token:
        tok = self.peek()
        if tok is None or tok.kind is not kind:
            raise UnexpectedToken(
                f"expected {kind.name}, found {tok!r}" if tok else f"expected {kind.name}, found end of input",
                tok.pos if tok else None,
            )
        return self.advance()

    # -- tangle expressions -------------------------------------------------

    def parse_expression(self) -> ConwayExpr:
        first = self.parse_sum()
        self.skip_spaces()
        if (t := self.peek()) is not None and t.kind is TokenKind.COMMA:
            parts = [first]
            while (t := self.peek()) is not None and t.kind is TokenKind.COMMA:
                self.advance()
                self.skip_spaces()
                parts.append(self.parse_sum())
                self.skip_spaces()
            return Ramification(tuple(parts))
        return first

    def parse_sum(self) -> ConwayExpr:
        expr = self.parse_product()
        self.skip_spaces()
        while (t := self.peek()) is not None and t.kind is TokenKind.PLUS:
            self.advance()
            self.skip_spaces()
            expr = Sum(expr, self.parse_product())
            self.skip_spaces()
        return expr

    def parse_product(self) -> ConwayExpr:
        expr = self.parse_factor()
        while True:
            save = self.pos
            self.skip_spaces()
            t = self.peek()
            if t is not None and t.kind in _ATOM_STARTERS:
                expr = Product(expr, self.parse_factor())
            else:
                self.pos = save
                return expr

    def parse_factor(self) -> ConwayExpr:
        tok = self.peek()
        if tok is None:
            raise UnexpectedToken("expected a tangle, found end of input", None)
        if tok.kind is TokenKind.MINUS:
            self.advance()
            nxt = self.peek()
            if nxt is None or nxt.kind not in (TokenKind.LPAREN, TokenKind.PRE):
                raise UnexpectedToken(f"reflection '-' must precede '(' or 'i', found {nxt!r}", tok.pos)
            return Reflect(self.parse_factor())
        return self.parse_power()

    def parse_power(self) -> ConwayExpr:
        base = self.parse_atom()
        if (t := self.peek()) is not None and t.kind is TokenKind.CARET:
            caret = self.advance()
            count_tok = self.expect(TokenKind.INTEGER)
            if count_tok.value < 1:
                raise UnexpectedToken("twist exponent must be a positive integer", count_tok.pos)
            kind = _twistable_kind(base)
            if kind is None:
                raise UnexpectedToken("only 1, -1, or i can carry a twist exponent", caret.pos)
            return make_twist(kind, count_tok.value)
        return base

    def parse_atom(self) -> ConwayExpr:
        tok = self.peek()
        if tok is None:
            raise UnexpectedToken("expected a tangle, found end of input", None)
        if tok.kind is TokenKind.INTEGER:
            self.advance()
            return integer_tangle(tok.value)
        if tok.kind is TokenKind.ZERO:
            self.advance()
            return Elementary(Kind.ZERO)
        if tok.kind is TokenKind.PRE:
            self.advance()
            return Elementary(Kind.PRE)
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            self.skip_spaces()
            inner = self.parse_expression()
            self.skip_spaces()
            closing = self.peek()
            if closing is None or closing.kind is not TokenKind.RPAREN:
                raise UnbalancedParenthesis("missing ')'", tok.pos)
            self.advance()
            return inner
        raise UnexpectedToken(f"unexpected {tok!r}", tok.pos)

    # -- polyhedral form ----------------------------------------------------

    def parse_polyhedral(self) -> Polyhedral:
        """Parse "n*..." with its dotted substituent list.

        Substituents are separated by dots; a substituent equal to 1 may be
        elided entirely, leaving its separators behind, and a colon is the
        two-dot separator written compactly.  So "2:2:2 0" is 2.1.2.1.2 0,
        "i::i" is i.1.1.1.i, and ":." sequences likewise surround elided 1s.
        """
        head = self.expect(TokenKind.INTEGER)
        if head.value < 1:
            raise UnexpectedToken("polyhedron vertex count must be positive", head.pos)
        stars = 0
        while (t := self.peek()) is not None and t.kind is TokenKind.STAR:
            self.advance()
            stars += 1
        assert stars >= 1
        slots: list[ConwayExpr] = []
        if self.peek() is None:
            return Polyhedral(head.value, stars, ())
        expecting_content = True  # an elided slot sits before a leading separator
        while True:
            t = self.peek()
            if t is None:
                if expecting_content:
                    slots.append(ONE)  # trailing separator elides a final 1
                break
            if t.kind in (TokenKind.DOT, TokenKind.COLON):
                self.advance()
                if expecting_content:
                    slots.append(ONE)
                if t.kind is TokenKind.COLON:
                    slots.append(ONE)  # the substituent folded into the colon
                expecting_content = True
                continue
            slots.append(self.parse_slot())
            expecting_content = False
        return Polyhedral(head.value, stars, tuple(slots))

    def parse_slot(self) -> ConwayExpr:
        # slot contents stop at '.', ':' and never contain bare commas
        t = self.peek()
        if t is not None and t.kind is TokenKind.COMMA:
            raise UnexpectedToken("bare ',' inside a polyhedron substituent; parenthesize it", t.pos)
        expr = self.parse_sum()
        t = self.peek()
        if t is not None and t.kind is TokenKind.COMMA:
            raise UnexpectedToken("bare ',' inside a polyhedron substituent; parenthesize it", t.pos)
        return expr


def _twistable_kind(base: ConwayExpr) -> Kind | None:
    if isinstance(base, Elementary) and base.kind in (Kind.POS, Kind.NEG, Kind.PRE):
        return base.kind
    return None


def _looks_polyhedral(tokens: list[Token]) -> bool:
    return (
        len(tokens) >= 2
        and tokens[0].kind is TokenKind.INTEGER
        and tokens[0].value > 0
        and tokens[1].kind is TokenKind.STAR
    )


def parse(source: str | list[Token]) -> ConwayExpr:
    """Parse a Conway symbol (string or token list) into an expression tree.

    Polyhedral symbols are padded: missing trailing substituents become the
    elementary tangle 1, so the slot tuple always has exactly `vertex_count`
    entries.  Registry membership of the polyhedron itself is checked at
    diagram-building time, except that the count/index pair must be sane.
    """
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    if not tokens:
        raise UnexpectedToken("empty symbol", 0)
    parser = _Parser(tokens)
    if _looks_polyhedral(tokens):
        expr: ConwayExpr = parser.parse_polyhedral()
        poly = expr
        assert isinstance(poly, Polyhedral)
        _check_registered(poly)
        if len(poly.slots) > poly.vertex_count:
            raise TooManySlots(
                f"{len(poly.slots)} substituents for a {poly.vertex_count}-vertex polyhedron",
                None,
            )
        if len(poly.slots) < poly.vertex_count:
            expr = Polyhedral(
                poly.vertex_count,
                poly.poly_index,
                poly.slots + (ONE,) * (poly.vertex_count - len(poly.slots)),
            )
    else:
        expr = parser.parse_expression()
    parser.skip_spaces()
    if parser.peek() is not None:
        tok = parser.peek()
        raise UnexpectedToken(f"trailing {tok!r}", tok.pos)
    return expr


def _check_registered(poly: Polyhedral) -> None:
    from .polyhedra import registered_keys

    from .errors import UnsupportedPolyhedron

    if poly.key() not in registered_keys():
        raise UnsupportedPolyhedron(f"no basic polyhedron template for {poly.key()!r}")


def expand_colons(source: str) -> str:
    """Rewrite the colon shorthand of a polyhedral symbol to explicit ".1." form.

    parse(s) == parse(expand_colons(s)) for every valid polyhedral symbol;
    runs of dots left behind still elide 1-substituents, so no collapsing.
    """
    return source.replace(":", ".1.")


# ---------------------------------------------------------------------------
# Rendering


def _precedence(expr: ConwayExpr) -> int:
    if isinstance(expr, Ramification):
        return 0
    if isinstance(expr, Sum):
        return 1
    if isinstance(expr, Product):
        return 2
    return 3


def _wrap(expr: ConwayExpr, minimum: int, reduced: bool) -> str:
    text = render(expr, reduced=reduced)
    if _precedence(expr) < minimum:
        return f"({text})"
    return text


def render(expr: ConwayExpr, reduced: bool = False) -> str:
    """Render an expression back to a Conway symbol.

    With reduced=False the output is the unreduced form: polyhedral slots are
    written out in full, one per vertex, with no colon shorthand.  With
    reduced=True trailing 1-substituents are dropped and interior ones fold
    into colons where that stays unambiguous.
    """
    if isinstance(expr, Elementary):
        return expr.kind.value
    if isinstance(expr, Twist):
        if expr.kind is Kind.POS:
            return str(expr.count)
        if expr.kind is Kind.NEG:
            return f"-{expr.count}"
        return f"i^{expr.count}"
    if isinstance(expr, Product):
        return f"{_wrap(expr.left, 2, reduced)} {_wrap(expr.right, 3, reduced)}"
    if isinstance(expr, Sum):
        return f"{_wrap(expr.left, 1, reduced)}+{_wrap(expr.right, 2, reduced)}"
    if isinstance(expr, Ramification):
        return ",".join(_wrap(p, 1, reduced) for p in expr.parts)
    if isinstance(expr, Reflect):
        inner = expr.inner
        if isinstance(inner, Elementary) and inner.kind is Kind.PRE:
            return "-i"
        return f"-({render(inner, reduced=reduced)})"
    if isinstance(expr, Polyhedral):
        head = f"{expr.vertex_count}{'*' * expr.poly_index}"
        slot_texts = [_render_slot(s, reduced) for s in expr.slots]
        if not reduced:
            return head + ".".join(slot_texts)
        return head + _reduced_slot_list(expr.slots, slot_texts)
    raise TypeError(f"not a Conway expression: {expr!r}")


def _render_slot(slot: ConwayExpr, reduced: bool) -> str:
    # slots hold sum-level expressions; a bare ramification needs parentheses
    if isinstance(slot, Ramification):
        return f"({render(slot, reduced=reduced)})"
    return render(slot, reduced=reduced)


def _lead_separator(count: int) -> str:
    # a leading colon elides two substituents, a leading dot one
    return ":" * (count // 2) + "." * (count % 2)


def _mid_separator(count: int) -> str:
    # between two written substituents, k elisions cost one colon for the
    # first and one more per further pair, with a dot mopping up an even k
    if count == 0:
        return "."
    return ":" * ((count + 1) // 2) + ("." if count % 2 == 0 else "")


def _reduced_slot_list(slots: tuple[ConwayExpr, ...], texts: list[str]) -> str:
    last = len(slots)
    while last > 0 and slots[last - 1] == ONE:
        last -= 1
    if last == 0:
        return ""
    out = ""
    elided = 0
    wrote_any = False
    for idx in range(last):
        if slots[idx] == ONE:
            elided += 1
            continue
        out += (_mid_separator(elided) if wrote_any else _lead_separator(elided)) + texts[idx]
        wrote_any = True
        elided = 0
    if not wrote_any:
        # every substituent up to `last` is 1; write the final one plainly
        return _lead_separator(last - 1) + "1"
    return out


def parse_and_expand(source: str) -> str:
    """Unreduced form of a symbol (shorthand expanded, slots padded)."""
    return render(parse(source), reduced=False)
