#!/usr/bin/env python3
"""
Tests for graded artinian algebras and their constructors
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.artinian import (GradedAlgebra, HVector, LinearForm, build_algebra, ci_hvector,
                             gorenstein_from_dual_form, gorenstein_from_points, monomial_ci,
                             points_hilbert_function, random_ci)
from leflab.errors import DuplicatePoints, GenericityFailure, NonHomogeneousGenerator, NotArtinian
from leflab.exactfield import FieldSpec
from leflab.multipoly import parse_polynomial

FP = FieldSpec.prime()
F7 = FieldSpec.prime(7)

COLLINEAR_POINTS = [(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (0, 0, 1)]


def _gens(texts, n, field=FP):
    return [parse_polynomial(t, n, field) for t in texts]


def test_ci_hvector():
    assert ci_hvector([2, 2, 2]).to_list() == [1, 3, 3, 1]
    assert ci_hvector([2, 2, 2, 2]).to_list() == [1, 4, 6, 4, 1]
    assert ci_hvector([3, 3, 3]).to_list() == [1, 3, 6, 7, 6, 3, 1]
    assert ci_hvector([2, 2, 3, 3]).total == 36


def test_hvector_validation():
    for bad in ((0, 1), (1, 0, 1), ()):
        try:
            HVector(bad)
        except ValueError:
            continue
        raise AssertionError(f"{bad} should be rejected")
    h = HVector((1, 3, 3, 1))
    assert h.socle_degree == 3 and h.codimension == 3 and h.is_symmetric()
    assert h[7] == 0


def test_monomial_ci():
    A = monomial_ci([2, 2, 3, 3])
    assert A.hvector.to_list() == [1, 4, 8, 10, 8, 4, 1]
    assert A.dimension == 36
    assert A.is_gorenstein()


def test_random_ci():
    A = random_ci([2, 2, 3], seed=0)
    assert A.hvector == ci_hvector([2, 2, 3])
    assert A.is_gorenstein()
    B = random_ci([2, 2, 3], seed=0)
    assert A.generators == B.generators


def test_not_artinian():
    try:
        GradedAlgebra(2, FP, _gens(["x1^2"], 2))
    except NotArtinian:
        pass
    else:
        raise AssertionError("one generator in two variables is not artinian")
    try:
        GradedAlgebra(2, FP, _gens(["x1^2", "x1*x2"], 2))
    except NotArtinian:
        pass
    else:
        raise AssertionError("x2 survives in every degree")


def test_non_homogeneous():
    try:
        GradedAlgebra(2, FP, _gens(["x1^2 + x2", "x2^2"], 2))
    except NonHomogeneousGenerator:
        pass
    else:
        raise AssertionError("non-homogeneous generator must fail")


def test_socle_and_gorenstein():
    A = build_algebra(2, FP, _gens(["x1^2", "x1*x2", "x2^3"], 2))
    assert A.hvector.to_list() == [1, 2, 1]
    assert A.socle_dimension(1) == 1
    assert not A.is_gorenstein()


def test_multiplication_matrix():
    A = monomial_ci([2, 2])
    ell = LinearForm(FP, [1, 1])
    m0 = A.multiplication_matrix(ell, 0)
    assert m0.shape == (2, 1) and m0.rank() == 1
    assert A.multiplication_matrix(ell, 1).rank() == 1
    assert A.multiplication_matrix(LinearForm(FP, [1, 0]), 1).rank() == 1
    assert A.power_matrix(ell, 0, 2).rank() == 1
    assert A.power_matrix(LinearForm(FP, [1, 0]), 0, 2).rank() == 0


def test_coordinates():
    A = monomial_ci([2, 2])
    assert A.coordinates(parse_polynomial("x1^2", 2, FP)) == [0]
    assert A.coordinates(parse_polynomial("3*x1*x2", 2, FP)) == [3]


def test_linear_form():
    assert LinearForm(F7, [1, 2, 0]) == LinearForm(F7, [2, 4, 0])
    assert LinearForm.parse("x1 + 2*x2", 3, F7) == LinearForm(F7, [1, 2, 0])
    assert LinearForm.from_support(3, F7, [1, 3]).coefficients == (1, 0, 1)
    assert LinearForm(F7, [0, 3, 1]).support() == (2, 3)
    try:
        LinearForm(F7, [0, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("the zero form must fail")
    try:
        LinearForm.parse("x1^2", 2, F7)
    except NonHomogeneousGenerator:
        pass
    else:
        raise AssertionError("a quadric is not a linear form")


def test_gorenstein_from_dual_form():
    A = gorenstein_from_dual_form(parse_polynomial("x1*x2*x3", 3, FP))
    assert A.hvector.to_list() == [1, 3, 3, 1]
    assert A.is_gorenstein()
    try:
        gorenstein_from_dual_form(parse_polynomial("x1^7 + x2^7", 2, F7))
    except GenericityFailure:
        pass
    else:
        raise AssertionError("characteristic must exceed the degree")


def test_points():
    assert points_hilbert_function(COLLINEAR_POINTS, 3, FP) == [1, 3, 4, 5]
    A = gorenstein_from_points(COLLINEAR_POINTS, 6, field=FP, seed=0)
    assert A.hvector.to_list() == [1, 3, 4, 5, 4, 3, 1]
    assert A.is_gorenstein()
    try:
        gorenstein_from_points([(1, 0, 0), (2, 0, 0)], 4, field=FP)
    except DuplicatePoints:
        pass
    else:
        raise AssertionError("proportional points must fail")


def main():
    tests = [test_ci_hvector, test_hvector_validation, test_monomial_ci, test_random_ci, test_not_artinian,
             test_non_homogeneous, test_socle_and_gorenstein, test_multiplication_matrix, test_coordinates,
             test_linear_form, test_gorenstein_from_dual_form, test_points]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
