"""Canonical text format: serialization and parsing of elements.

The canonical form is a single line, terms ordered by degree and then
lexicographically by symbol tuple, separated by single spaces.  Every
term carries an explicit sign, a magnitude and a key::

    +1a -2b.foo +3/2(p.q)r

Integer magnitudes print without a denominator; other rationals print
as ``n/d`` with the sign attached to the whole term.  The zero element
prints as ``0``.

:func:`parse` reads this format back.  The grammar is::

    element := '0' | term+
    term    := ('+' | '-') digits ('/' digits)? key
    key     := sym | sym '.' sym | '(' sym '.' sym ')' sym
    sym     := [A-Za-z_][A-Za-z_0-9]*

Whitespace between terms is arbitrary on input.  Duplicate keys
accumulate and zero-coefficient terms are dropped, so parsing is total
on the grammar and ``parse(serialize(e)) == e`` for every element whose
symbols fit the ``sym`` production.
"""

from __future__ import annotations

import re

from .core import AaaElement, AlgebraError, Coefficient, TermKey, _accumulate, zero
from fractions import Fraction

__all__ = ["ParseError", "serialize", "parse"]


class ParseError(AlgebraError):
    """Syntax error in canonical text, with a 1-based column position."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.message = message
        self.column = column


def _render_key(key: TermKey) -> str:
    if len(key) == 1:
        return key[0]
    if len(key) == 2:
        return f"{key[0]}.{key[1]}"
    return f"({key[0]}.{key[1]}){key[2]}"


def _render_term(key: TermKey, coeff: Coefficient) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    num, den = mag.numerator, mag.denominator
    magnitude = str(num) if den == 1 else f"{num}/{den}"
    return f"{sign}{magnitude}{_render_key(key)}"


def serialize(element: AaaElement) -> str:
    """Render the canonical one-line form; equal elements render identically."""
    terms = element.terms()
    if not terms:
        return "0"
    return " ".join(_render_term(key, coeff) for key, coeff in terms)


_SYMBOL_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_DIGITS_RE = re.compile(r"[0-9]+")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _parse_symbol(text: str, i: int) -> tuple[str, int]:
    m = _SYMBOL_RE.match(text, i)
    if not m:
        raise ParseError("expected symbol", i + 1)
    return m.group(), m.end()


def _parse_key(text: str, i: int) -> tuple[TermKey, int]:
    if i < len(text) and text[i] == "(":
        open_col = i + 1
        first, i = _parse_symbol(text, i + 1)
        if i >= len(text) or text[i] != ".":
            raise ParseError("expected '.' inside '(...)'", i + 1)
        second, i = _parse_symbol(text, i + 1)
        if i >= len(text) or text[i] != ")":
            raise ParseError("unclosed '('", open_col)
        third, i = _parse_symbol(text, i + 1)
        return (first, second, third), i
    first, i = _parse_symbol(text, i)
    if i < len(text) and text[i] == ".":
        second, i = _parse_symbol(text, i + 1)
        return (first, second), i
    return (first,), i


def parse(text: str) -> AaaElement:
    """Parse canonical text into an element.

    Raises :class:`ParseError` (carrying a 1-based ``column``) on any
    input outside the grammar.
    """
    i = _skip_ws(text, 0)
    if i >= len(text):
        raise ParseError("empty input", i + 1)
    if text[i] == "0":
        j = _skip_ws(text, i + 1)
        if j < len(text):
            raise ParseError("unexpected text after zero element", j + 1)
        return zero()
    maps: tuple[dict, dict, dict] = ({}, {}, {})
    while i < len(text):
        ch = text[i]
        if ch not in "+-":
            raise ParseError(f"expected '+' or '-', found {ch!r}", i + 1)
        sign = -1 if ch == "-" else 1
        i += 1
        m = _DIGITS_RE.match(text, i)
        if not m:
            raise ParseError("expected digits after sign", i + 1)
        num = int(m.group())
        i = m.end()
        den = 1
        if i < len(text) and text[i] == "/":
            m = _DIGITS_RE.match(text, i + 1)
            if not m:
                raise ParseError("expected digits after '/'", i + 2)
            den = int(m.group())
            if den == 0:
                raise ParseError("zero denominator", i + 2)
            i = m.end()
        coeff: Coefficient = sign * num if den == 1 else Fraction(sign * num, den)
        key, i = _parse_key(text, i)
        _accumulate(maps[len(key) - 1], key, coeff)
        i = _skip_ws(text, i)
    return AaaElement(*maps)
