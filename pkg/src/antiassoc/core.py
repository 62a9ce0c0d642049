"""Exact arithmetic in the free antiassociative algebra.

An element is a finite sum of three kinds of terms over named
generators: single symbols ``a``, two-symbol products ``a.b``, and
left-bracketed three-symbol products ``(a.b)c``.  There is no constant
(degree-0) component, because the only scalar the vector space admits
is zero, and every product of total degree four or more vanishes, so
three sparse coefficient maps are a complete representation.

Coefficients are exact rationals: plain ints, or ``fractions.Fraction``
for non-integer values.  All operations are exact, so ``==`` between
elements is trustworthy.

Multiplication depends on the associativity constant K carried by an
:class:`AlgebraContext`; the triple-product rule is ``a(bc) = K*(ab)c``.
The default K = -1 makes the algebra antiassociative, K = 1 makes the
retained degree <= 3 part associative.  The ``*`` operator on elements
uses the default context; pass an explicit context to :func:`mul` for
any other K.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "AlgebraError",
    "InvalidSymbolError",
    "LengthMismatchError",
    "Coefficient",
    "TermKey",
    "AaaElement",
    "AlgebraContext",
    "DEFAULT_CONTEXT",
    "check_symbol",
    "as_coeff",
    "zero",
    "from_symbols",
    "make_element",
    "add",
    "neg",
    "sub",
    "scalar_mul",
    "mul",
    "equals",
]

Coefficient = Union[int, Fraction]
TermKey = tuple[str, ...]


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSymbolError(AlgebraError):
    """A symbol name violates the allowed character set."""


class LengthMismatchError(AlgebraError):
    """Parallel argument lists differ in length."""


# Characters with structural meaning in the text format and the
# expression language; symbols may not contain them (nor whitespace).
_RESERVED = frozenset(".()+-*=,")


def check_symbol(name: object) -> str:
    """Validate a generator name and return it.

    A symbol is a nonempty string that does not start with a digit and
    contains none of ``. ( ) + - * = ,`` or whitespace.
    """
    if not isinstance(name, str) or not name:
        raise InvalidSymbolError("symbol name must be a nonempty string")
    if name[0].isdigit():
        raise InvalidSymbolError(f"symbol name may not start with a digit: {name!r}")
    for ch in name:
        if ch in _RESERVED or ch.isspace():
            raise InvalidSymbolError(
                f"symbol name contains reserved character {ch!r}: {name!r}"
            )
    return name


def as_coeff(value: object) -> Coefficient:
    """Coerce to an exact coefficient: an int, or a Fraction in lowest terms.

    Accepts ints, Fractions and rational text like ``"3/2"``.  Floats are
    rejected: coefficients must be exact.
    """
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        try:
            return as_coeff(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(
        "coefficients must be exact rationals "
        f"(int, Fraction or 'n/d' text), not {type(value).__name__}"
    )


@dataclass(frozen=True)
class AaaElement:
    """An element, held as three sparse maps from term key to coefficient.

    Keys are tuples of 1, 2 or 3 symbol names; a 3-tuple ``(i, j, k)``
    always denotes the left bracketing ``(i.j)k``.  The maps never store
    a zero coefficient, so map equality is element equality.  Elements
    are immutable values: every operation returns a new element, and the
    maps must be treated as read-only.
    """

    singles: dict[TermKey, Coefficient]
    doubles: dict[TermKey, Coefficient]
    triples: dict[TermKey, Coefficient]

    def __post_init__(self) -> None:
        for attr, degree in (("singles", 1), ("doubles", 2), ("triples", 3)):
            clean: dict = {}
            for key, value in getattr(self, attr).items():
                if isinstance(key, str):
                    raise LengthMismatchError(
                        f"term keys must be symbol tuples, got the string {key!r}"
                    )
                key = tuple(key)
                if len(key) != degree:
                    raise LengthMismatchError(
                        f"{attr} key {key!r} does not have degree {degree}"
                    )
                if not all(isinstance(s, str) and s for s in key):
                    raise InvalidSymbolError(f"bad symbol in term key {key!r}")
                coeff = as_coeff(value)
                if coeff:
                    clean[key] = coeff
            object.__setattr__(self, attr, clean)

    def terms(self) -> list[tuple[TermKey, Coefficient]]:
        """All (key, coefficient) pairs in canonical order.

        Canonical order is by degree, then lexicographically by symbol
        tuple within a degree; it is the order used by serialization.
        """
        out: list = []
        for m in (self.singles, self.doubles, self.triples):
            out.extend(sorted(m.items()))
        return out

    def __bool__(self) -> bool:
        return bool(self.singles or self.doubles or self.triples)

    def __add__(self, other: object) -> AaaElement:
        if not isinstance(other, AaaElement):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: object) -> AaaElement:
        if not isinstance(other, AaaElement):
            return NotImplemented
        return sub(self, other)

    def __neg__(self) -> AaaElement:
        return neg(self)

    def __mul__(self, other: object) -> AaaElement:
        if isinstance(other, AaaElement):
            return mul(DEFAULT_CONTEXT, self, other)
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    def __rmul__(self, other: object) -> AaaElement:
        if isinstance(other, (int, Fraction)):
            return scalar_mul(other, self)
        return NotImplemented

    def __str__(self) -> str:
        from .textio import serialize

        return serialize(self)

    def __repr__(self) -> str:
        return f"<AaaElement {self}>"


@dataclass(frozen=True)
class AlgebraContext:
    """Multiplication policy: the constant K in the rewrite a(bc) = K*(ab)c."""

    k: Coefficient = -1

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", as_coeff(self.k))

    def mul(self, a: AaaElement, b: AaaElement) -> AaaElement:
        return mul(self, a, b)


DEFAULT_CONTEXT = AlgebraContext()


def zero() -> AaaElement:
    """The additive identity: the element with no terms."""
    return AaaElement({}, {}, {})


def from_symbols(names: Iterable[str]) -> AaaElement:
    """Sum of the named generators, each with coefficient 1.

    Duplicate names accumulate, so ``["a", "a"]`` gives ``+2a``.
    """
    singles: dict = {}
    for name in names:
        _accumulate(singles, (check_symbol(name),), 1)
    return AaaElement(singles, {}, {})


def make_element(
    s1: Sequence[str] = (),
    sc: Sequence = (),
    d1: Sequence[str] = (),
    d2: Sequence[str] = (),
    dc: Sequence = (),
    t1: Sequence[str] = (),
    t2: Sequence[str] = (),
    t3: Sequence[str] = (),
    tc: Sequence = (),
) -> AaaElement:
    """Build an element from parallel symbol and coefficient lists.

    ``(s1, sc)`` give the single-symbol terms, ``(d1, d2, dc)`` the
    two-symbol terms ``d1[i].d2[i]`` and ``(t1, t2, t3, tc)`` the
    three-symbol terms ``(t1[i].t2[i])t3[i]``.  Lists within a group
    must have equal lengths; any group may be empty.  Duplicate keys
    accumulate by addition and terms that sum to zero are dropped.
    """
    return AaaElement(
        _build_group((s1,), sc, "s1/sc"),
        _build_group((d1, d2), dc, "d1/d2/dc"),
        _build_group((t1, t2, t3), tc, "t1/t2/t3/tc"),
    )


def _build_group(symbol_cols: Sequence[Sequence[str]], coeffs: Sequence, what: str) -> dict:
    cols = [list(c) for c in symbol_cols]
    values = list(coeffs)
    if any(len(c) != len(values) for c in cols):
        raise LengthMismatchError(f"parallel lists {what} must have equal lengths")
    out: dict = {}
    for i, value in enumerate(values):
        key = tuple(check_symbol(col[i]) for col in cols)
        _accumulate(out, key, as_coeff(value))
    return out


def _accumulate(m: dict, key: tuple, coeff: Coefficient) -> None:
    total = m.get(key, 0) + coeff
    if total:
        m[key] = total
    elif key in m:
        del m[key]


def _merged(x: Mapping, y: Mapping) -> dict:
    out = dict(x)
    for key, coeff in y.items():
        _accumulate(out, key, coeff)
    return out


def add(a: AaaElement, b: AaaElement) -> AaaElement:
    """Elementwise sum; keys whose coefficients cancel are removed."""
    return AaaElement(
        _merged(a.singles, b.singles),
        _merged(a.doubles, b.doubles),
        _merged(a.triples, b.triples),
    )


def neg(a: AaaElement) -> AaaElement:
    return AaaElement(
        {k: -c for k, c in a.singles.items()},
        {k: -c for k, c in a.doubles.items()},
        {k: -c for k, c in a.triples.items()},
    )


def sub(a: AaaElement, b: AaaElement) -> AaaElement:
    return add(a, neg(b))


def scalar_mul(c: object, a: AaaElement) -> AaaElement:
    """Multiply every coefficient by the exact scalar ``c``."""
    c = as_coeff(c)
    if not c:
        return zero()
    return AaaElement(
        {k: c * v for k, v in a.singles.items()},
        {k: c * v for k, v in a.doubles.items()},
        {k: c * v for k, v in a.triples.items()},
    )


def mul(ctx: AlgebraContext, a: AaaElement, b: AaaElement) -> AaaElement:
    """Product of two elements under ``ctx``.

    Singles of ``a`` times singles of ``b`` land on two-symbol keys
    ``(i, j)``; doubles of ``a`` times singles of ``b`` land on
    ``(i, j, k)``; and singles of ``a`` times doubles of ``b`` land on
    ``(i, j, k)`` scaled by ``ctx.k``, which is the rewrite
    ``i(jk) = K*(ij)k``.  Every other pairing has total degree four or
    more and contributes nothing, so the result never has single-symbol
    terms.
    """
    doubles: dict = {}
    for (i,), ca in a.singles.items():
        for (j,), cb in b.singles.items():
            _accumulate(doubles, (i, j), ca * cb)
    triples: dict = {}
    for (i, j), ca in a.doubles.items():
        for (last,), cb in b.singles.items():
            _accumulate(triples, (i, j, last), ca * cb)
    if ctx.k:
        for (i,), ca in a.singles.items():
            for (j, last), cb in b.doubles.items():
                _accumulate(triples, (i, j, last), ctx.k * ca * cb)
    return AaaElement({}, doubles, triples)


def equals(a: AaaElement, b: AaaElement) -> bool:
    """True iff the canonical forms are identical."""
    return a == b
