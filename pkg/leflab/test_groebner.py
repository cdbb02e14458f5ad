#!/usr/bin/env python3
"""
Tests for the Buchberger engine and Hilbert-series dimension/degree
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.errors import BudgetExceeded
from leflab.exactfield import FieldSpec, make_rng
from leflab.groebner import (audit_basis, buchberger, contains, dimension_degree, hilbert_numerator,
                             ideal_intersection, normal_form)
from leflab.multipoly import Polynomial, monomial_basis, parse_polynomial

FP = FieldSpec.prime()
Q = FieldSpec.rationals()

TWISTED_CUBIC = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]


def _gb(texts, n, field=FP, **kwargs):
    G = buchberger([parse_polynomial(t, n, field) for t in texts], **kwargs)
    audit_basis(G)
    return G


def _random_form(n, d, rng, field=FP):
    return Polynomial.from_dense(n, d, field, [field.random_element(rng) for _ in monomial_basis(n, d)])


def _dd(texts, n):
    return dimension_degree(_gb(texts, n))


def test_twisted_cubic():
    for field in (FP, Q):
        G = _gb(TWISTED_CUBIC, 4, field)
        assert len(G) == 3
        assert set(G.leading_monomials) == {(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)}
        audit_basis(G)
        dd = dimension_degree(G)
        assert dd.projective_dimension == 1 and dd.degree == 3 and dd.codimension == 2


def test_membership():
    G = _gb(TWISTED_CUBIC, 4)
    multiple = parse_polynomial("x1^2*x3 - x1*x2^2 + x2*x4^2 - x4*x3^2", 4, FP)
    assert contains(G, multiple)
    assert not contains(G, parse_polynomial("x1^2", 4, FP))
    assert normal_form(parse_polynomial("x1^2", 4, FP), G) == parse_polynomial("x1^2", 4, FP)


def test_dimension_degree():
    assert _dd(["x1"], 3).projective_dimension == 1
    assert _dd(["x1"], 3).degree == 1
    assert _dd(["x1*x2"], 3).degree == 2
    point = _dd(["x1", "x2"], 3)
    assert point.projective_dimension == 0 and point.degree == 1 and point.codimension == 2
    embedded = _dd(["x1^2", "x1*x2"], 3)
    assert embedded.projective_dimension == 1 and embedded.degree == 1
    empty = _dd(["x1^2", "x2^2"], 2)
    assert empty.is_empty and empty.degree == 0 and empty.codimension == 2


def test_single_form_dimension_degree():
    rng = make_rng(0, "single-form")
    for n in (2, 3, 4):
        for t in range(1, 13):
            G = buchberger([_random_form(n, t, rng)])
            audit_basis(G)
            dd = dimension_degree(G)
            assert (dd.projective_dimension, dd.degree) == (n - 2, t), (n, t)


def test_random_ideals():
    for seed in range(10):
        rng = make_rng(seed, "random-ideal")
        gens = [_random_form(3, 2, rng) for _ in range(rng.randint(2, 3))]
        G = buchberger(gens)
        audit_basis(G)
        member = None
        for g in gens:
            term = _random_form(3, 1, rng) * g
            member = term if member is None else member + term
        assert normal_form(member, G).is_zero(), seed
        for d in (1, 2):
            assert normal_form(member * _random_form(3, d, rng), G).is_zero(), seed


def test_zero_ideal():
    G = buchberger([], n=3, field=FP)
    assert G.is_zero()
    dd = dimension_degree(G)
    assert dd.krull_dimension == 3 and dd.degree == 1 and dd.codimension == 0


def _trimmed(coeffs):
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def test_hilbert_numerator():
    # S/(x2, x3)^2 in four variables: (1 + 2t)(1 - t)^2
    assert _trimmed(hilbert_numerator([(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)], 4)) == [1, 0, -3, 2]
    assert hilbert_numerator([(1, 0)], 2) == [1, -1]
    assert hilbert_numerator([(0, 0)], 2) == [0]


def test_budget():
    try:
        _gb(TWISTED_CUBIC, 4, budget=0)
    except BudgetExceeded as e:
        assert e.steps == 1
    else:
        raise AssertionError("a zero budget must be exceeded")


def test_intersection():
    G1 = _gb(["x1"], 2)
    G2 = _gb(["x2"], 2)
    G = ideal_intersection(G1, G2)
    audit_basis(G)
    assert G.leading_monomials == ((1, 1),)
    dd = dimension_degree(G)
    assert dd.projective_dimension == 0 and dd.degree == 2


def main():
    tests = [test_twisted_cubic, test_membership, test_dimension_degree, test_single_form_dimension_degree,
             test_random_ideals, test_zero_ideal,
             test_hilbert_numerator, test_budget, test_intersection]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
