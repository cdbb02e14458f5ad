#!/usr/bin/env python3
"""
Tests for exact coefficient fields
"""

import sys
import os
from fractions import Fraction
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.errors import ConfigError, DivisionByZero, FieldMismatch
from leflab.exactfield import FieldSpec, Scalar, derive_seed, field_arith, make_rng, random_scalar

F7 = FieldSpec.prime(7)
Q = FieldSpec.rationals()


def test_parse():
    assert FieldSpec.parse("fp:32003") == FieldSpec.prime()
    assert FieldSpec.parse(" Q ") == Q
    assert str(FieldSpec.parse("fp:101")) == "fp:101"
    for bad in ("fp:32004", "fp:two", "gf:7", "fp:2"):
        try:
            FieldSpec.parse(bad)
        except ConfigError:
            continue
        raise AssertionError(f"{bad} should be rejected")


def test_coerce():
    assert F7.coerce("1/2") == 4
    assert F7.coerce(-1) == 6
    assert F7.coerce(Fraction(3, 2)) == 5
    assert Q.coerce("3/6") == Fraction(1, 2)
    try:
        F7.coerce("1/7")
    except DivisionByZero:
        pass
    else:
        raise AssertionError("denominator divisible by p must fail")


def test_arithmetic():
    a, b = Scalar.of(F7, 3), Scalar.of(F7, 2)
    assert field_arith("add", a, b).value == 5
    assert field_arith("sub", b, a).value == 6
    assert field_arith("mul", a, b).value == 6
    assert field_arith("div", a, b).value == 5
    assert field_arith("inv", b).value == 4
    assert field_arith("neg", a).value == 4
    half = field_arith("div", Scalar.of(Q, 3), Scalar.of(Q, 2))
    assert half.value == Fraction(3, 2)


def test_inverse_property():
    rng = make_rng(0, "inverse")
    for field in (FieldSpec.prime(), F7, Q):
        one = Scalar.of(field, 1)
        for _ in range(1000):
            x = random_scalar(field, rng, nonzero=True)
            assert field_arith("mul", x, field_arith("inv", x)) == one, x


def test_division_by_zero():
    for field in (F7, Q):
        try:
            field_arith("inv", Scalar.of(field, 0))
        except DivisionByZero as e:
            assert isinstance(e, ZeroDivisionError)
        else:
            raise AssertionError("inverse of zero must fail")


def test_field_mismatch():
    try:
        Scalar.of(F7, 1) + Scalar.of(FieldSpec.prime(11), 1)
    except FieldMismatch:
        pass
    else:
        raise AssertionError("mixing fields must fail")


def test_display():
    assert F7.to_display(6) == "-1"
    assert F7.to_display(3) == "3"
    assert Q.to_json(Fraction(-1, 2)) == "-1/2"


def test_seeds():
    assert derive_seed(0, "census", (2, 2, 3)) == derive_seed(0, "census", (2, 2, 3))
    assert derive_seed(0, "census", (2, 2, 3)) != derive_seed(1, "census", (2, 2, 3))
    assert derive_seed(0, "census", (2, 2, 3)) != derive_seed(0, "census", (2, 3, 3))
    assert 0 <= derive_seed(5, "x") < 2 ** 63
    a = [make_rng(3, "draw").random() for _ in range(3)]
    b = [make_rng(3, "draw").random() for _ in range(3)]
    assert a == b


def test_random_nonzero():
    rng = make_rng(0, "nonzero")
    for field in (F7, Q):
        assert all(not random_scalar(field, rng, nonzero=True).is_zero() for _ in range(200))


def main():
    tests = [test_parse, test_coerce, test_arithmetic, test_inverse_property, test_division_by_zero,
             test_field_mismatch, test_display, test_seeds, test_random_nonzero]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
