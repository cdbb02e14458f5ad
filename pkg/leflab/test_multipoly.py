#!/usr/bin/env python3
"""
Tests for sparse polynomials and the polynomial text grammar
"""

import sys
import os
from fractions import Fraction
from math import comb
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.errors import ArityMismatch, ParseError, UnknownVariable
from leflab.exactfield import FieldSpec
from leflab.multipoly import Polynomial, monomial_basis, parse_polynomial, poly_op

F7 = FieldSpec.prime(7)
Q = FieldSpec.rationals()


def test_monomial_basis_order():
    assert monomial_basis(3, 2) == ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))
    assert len(monomial_basis(4, 3)) == 20
    assert monomial_basis(2, 0) == ((0, 0),)


def test_monomial_basis_counts():
    for n in range(1, 7):
        for d in range(13):
            basis = monomial_basis(n, d)
            assert len(basis) == comb(d + n - 1, n - 1), (n, d)
            assert len(set(basis)) == len(basis)
            assert all(sum(m) == d for m in basis)


def test_parse():
    f = parse_polynomial("3*x1^2*x3 - 1/2*x2^3", 3, Q)
    assert f.terms == {(2, 0, 1): Fraction(3), (0, 3, 0): Fraction(-1, 2)}
    assert f.homogeneous_degree() == 3
    g = parse_polynomial("x1^3", 3, F7)
    assert g.terms == {(3, 0, 0): 1}
    assert parse_polynomial("x1 + 6*x1", 2, F7).is_zero()


def test_parse_errors():
    try:
        parse_polynomial("x1^^2", 2, F7)
    except ParseError as e:
        assert e.column == 4
    else:
        raise AssertionError("malformed exponent must fail")
    for text in ("y1", "x4"):
        try:
            parse_polynomial(text, 3, F7, prefixes=("x",))
        except UnknownVariable:
            continue
        raise AssertionError(f"{text} should be unknown")
    try:
        parse_polynomial("x1 x2", 2, F7)
    except ParseError:
        pass
    else:
        raise AssertionError("missing operator must fail")


def test_arithmetic():
    x1 = Polynomial.variable(2, F7, 0)
    x2 = Polynomial.variable(2, F7, 1)
    square = (x1 + x2) ** 2
    assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (square - x1 * x1 - x2 * x2).terms == {(1, 1): 2}
    assert poly_op("scale", x1, 3).terms == {(1, 0): 3}
    assert (x1 + x2 * x2).homogeneous_degree() is None
    assert not (x1 + x2 * x2).is_homogeneous()


def test_evaluate():
    f = parse_polynomial("x1^2 + 2*x1*x2", 2, F7)
    assert f.evaluate([1, 1]) == 3
    assert poly_op("eval", f, [2, 3]).value == (4 + 12) % 7
    try:
        f.evaluate([1])
    except ArityMismatch:
        pass
    else:
        raise AssertionError("wrong arity must fail")


def test_substitute_linear():
    f = parse_polynomial("x1*x2", 2, Q)
    restricted = f.substitute_linear([1, 0], [0, 1])
    assert restricted.terms == {(1, 1): Fraction(1)}
    g = parse_polynomial("x1^2 - x2^2", 2, Q).substitute_linear([1, 1], [1, -1])
    # (s + t)^2 - (s - t)^2 = 4 s t
    assert g.terms == {(1, 1): Fraction(4)}


def test_to_string():
    f = parse_polynomial("x1^2 - x2", 2, F7)
    assert f.to_string() == "x1^2 - x2"
    assert Polynomial.zero(2, F7).to_string() == "0"
    assert parse_polynomial("3*x1*x2", 2, F7).to_string("a") == "3*a1*a2"


def test_equality_and_hash():
    a = parse_polynomial("x1 + x2", 2, F7)
    b = parse_polynomial("x2 + x1", 2, F7)
    assert a == b and hash(a) == hash(b)
    assert a != parse_polynomial("x1 + x2", 2, Q)


def main():
    tests = [test_monomial_basis_order, test_monomial_basis_counts, test_parse, test_parse_errors,
             test_arithmetic, test_evaluate, test_substitute_linear, test_to_string, test_equality_and_hash]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
