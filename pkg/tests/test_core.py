from fractions import Fraction

import pytest

from antiassoc import (
    AaaElement,
    AlgebraContext,
    DEFAULT_CONTEXT,
    InvalidSymbolError,
    LengthMismatchError,
    add,
    as_coeff,
    check_symbol,
    equals,
    from_symbols,
    make_element,
    mul,
    neg,
    scalar_mul,
    serialize,
    sub,
    zero,
)
from conftest import PRODUCT_TEXT, X1_TEXT, X_PLUS_X1_TEXT, X_TEXT, Y_TEXT, Z_TEXT


def gens(*names):
    return [from_symbols([n]) for n in names]


class TestSymbols:
    def test_valid_names(self):
        for name in ("a", "foo", "x1", "_tmp", "A_B_9"):
            assert check_symbol(name) == name

    @pytest.mark.parametrize(
        "bad",
        ["", "9a", "a.b", "a b", "a+b", "p*q", "x(", "y)", "u=v", "s,t", "a\tb", "a-b"],
    )
    def test_invalid_names(self, bad):
        with pytest.raises(InvalidSymbolError):
            check_symbol(bad)

    def test_non_string(self):
        with pytest.raises(InvalidSymbolError):
            check_symbol(3)


class TestCoefficients:
    def test_int_stays_int(self):
        assert as_coeff(5) == 5 and isinstance(as_coeff(5), int)

    def test_integral_fraction_collapses(self):
        assert isinstance(as_coeff(Fraction(4, 2)), int)

    def test_text(self):
        assert as_coeff("3/2") == Fraction(3, 2)
        assert as_coeff("-7") == -7

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            as_coeff(0.5)

    def test_bad_text(self):
        with pytest.raises(ValueError):
            as_coeff("3/0")


class TestConstruction:
    def test_zero_has_no_terms(self):
        assert not zero()
        assert serialize(zero()) == "0"

    def test_from_symbols(self, x):
        assert serialize(x) == X_TEXT

    def test_from_symbols_accumulates(self):
        assert serialize(from_symbols(["a", "a"])) == "+2a"

    def test_from_symbols_empty(self):
        assert from_symbols([]) == zero()

    def test_make_element_singles(self, x1):
        assert serialize(x1) == X1_TEXT

    def test_make_element_doubles(self, y):
        assert serialize(y) == Y_TEXT

    def test_make_element_triples(self, z):
        assert serialize(z) == Z_TEXT

    def test_make_element_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            make_element(s1=["a", "b"], sc=[1])
        with pytest.raises(LengthMismatchError):
            make_element(d1=["a"], d2=["b", "c"], dc=[1])

    def test_make_element_duplicate_keys_accumulate(self):
        e = make_element(s1=["a", "a"], sc=[2, 3])
        assert serialize(e) == "+5a"

    def test_make_element_zero_sum_dropped(self):
        e = make_element(d1=["a", "a"], d2=["b", "b"], dc=[2, -2])
        assert e == zero()

    def test_direct_construction_normalizes(self):
        e = AaaElement({("a",): Fraction(4, 2)}, {("a", "b"): 0}, {})
        assert e.singles == {("a",): 2}
        assert e.doubles == {}

    def test_direct_construction_rejects_wrong_degree(self):
        with pytest.raises(LengthMismatchError):
            AaaElement({("a", "b"): 1}, {}, {})


class TestAddition:
    def test_cancellation(self, x, x1):
        assert serialize(x + x1) == X_PLUS_X1_TEXT

    def test_zero_is_identity(self, x1):
        assert zero() + x1 == x1
        assert x1 + zero() == x1

    def test_additive_inverse(self, y):
        assert y + neg(y) == zero()
        assert add(y, neg(y)) == zero()

    def test_sub(self, z):
        assert sub(z, z) == zero()
        assert z - z == zero()


class TestScalarAction:
    def test_thousandfold(self):
        e = make_element(d1=["b", "c", "c"], d2=["d", "b", "d"], dc=[1, 2, 2])
        assert serialize(scalar_mul(1000, e)) == "+1000b.d +2000c.b +2000c.d"

    def test_zero_scalar(self, x):
        assert scalar_mul(0, x) == zero()

    def test_operator_forms(self, x):
        assert 2 * x == scalar_mul(2, x)
        assert x * 2 == scalar_mul(2, x)
        assert serialize(Fraction(1, 2) * x) == "+1/2p +1/2q +1/2r"

    def test_float_scalar_rejected(self, x):
        with pytest.raises(TypeError):
            x * 0.5  # noqa: B018


class TestMultiplication:
    def test_worked_product(self, x, x1, y):
        assert serialize(x * (x1 + y)) == PRODUCT_TEXT

    def test_generator_pair(self):
        a, b = gens("a", "b")
        assert serialize(a * b) == "+1a.b"

    def test_bracket_rewrite_default_context(self):
        a, b, c = gens("a", "b", "c")
        assert serialize(a * (b * c)) == "-1(a.b)c"
        assert serialize((a * b) * c) == "+1(a.b)c"

    def test_degree_four_vanishes(self):
        a, b, c, d = gens("a", "b", "c", "d")
        assert a * b * c * d == zero()
        assert (a * b) * (c * d) == zero()

    def test_never_produces_singles(self, x, x1):
        assert not (x * x1).singles

    def test_zero_absorbs(self, x):
        assert x * zero() == zero()
        assert zero() * x == zero()

    def test_context_controls_sign(self):
        a, b, c = gens("a", "b", "c")
        assoc = AlgebraContext(1)
        assert mul(assoc, a, mul(assoc, b, c)) == mul(assoc, mul(assoc, a, b), c)
        half = AlgebraContext("5/2")
        assert serialize(mul(half, a, mul(half, b, c))) == "+5/2(a.b)c"

    def test_distributivity_instance(self, x, x1, y):
        assert equals(x * (x1 + y), x * x1 + x * y)


class TestImmutability:
    def test_operations_do_not_mutate_inputs(self, x, x1):
        before = (dict(x.singles), dict(x.doubles), dict(x.triples))
        x + x1
        x * x1
        neg(x)
        scalar_mul(7, x)
        assert (x.singles, x.doubles, x.triples) == before

    def test_default_context_constant(self):
        assert DEFAULT_CONTEXT.k == -1
