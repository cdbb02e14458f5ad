#!/usr/bin/env python3
"""
Tests for Lefschetz properties and Jordan types
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.artinian import GradedAlgebra, HVector, LinearForm, monomial_ci, random_ci
from leflab.errors import ArityMismatch, EmptySupport
from leflab.exactfield import FieldSpec, make_rng
from leflab.lefjordan import (Partition, dual_partition, has_wlp, is_strong_lefschetz, is_weak_lefschetz,
                              jordan_type, monomial_jordan_prediction, slp_rank_table)
from leflab.multipoly import parse_polynomial

FP = FieldSpec.prime()

FOUR_QUADRICS = {
    (1, 2, 3, 4): [5, 3, 3, 3, 1, 1],
    (1, 2, 3): [4, 4, 2, 2, 2, 2],
    (1, 2): [3, 3, 3, 3, 1, 1, 1, 1],
    (1,): [2] * 8,
}


def test_partition():
    p = Partition((3, 1))
    assert p.conjugate() == Partition((2, 1, 1))
    assert p.conjugate().conjugate() == p
    assert p.size == 4 and len(p) == 2
    assert Partition.from_parts([1, 0, 3, 1]) == Partition((3, 1, 1))
    assert Partition((5, 3, 3, 3, 1, 1)).exponent_notation() == "[5 3^3 1^2]"
    assert str(p) == "[3,1]"
    for bad in ((1, 3), (2, 0)):
        try:
            Partition(bad)
        except ValueError:
            continue
        raise AssertionError(f"{bad} is not a partition")


def test_dual_partition():
    assert dual_partition(HVector((1, 3, 3, 1))).to_list() == [4, 2, 2]
    assert dual_partition(HVector((1, 4, 6, 4, 1))).to_list() == [5, 3, 3, 3, 1, 1]


def test_monomial_prediction():
    for support, parts in FOUR_QUADRICS.items():
        assert monomial_jordan_prediction([2, 2, 2, 2], support).to_list() == parts
    assert monomial_jordan_prediction([2, 2, 2, 2], [2, 1, 1]).to_list() == FOUR_QUADRICS[(1, 2)]
    try:
        monomial_jordan_prediction([2, 2], [])
    except EmptySupport:
        pass
    else:
        raise AssertionError("empty support")
    try:
        monomial_jordan_prediction([2, 2], [3])
    except ArityMismatch:
        pass
    else:
        raise AssertionError("index out of range")


def test_jordan_type_matches_prediction():
    A = monomial_ci([2, 2, 2, 2])
    for support, parts in FOUR_QUADRICS.items():
        ell = LinearForm.from_support(4, FP, support)
        assert jordan_type(A, ell).to_list() == parts, support
        assert jordan_type(A, ell).size == A.dimension


def test_strong_lefschetz():
    A = monomial_ci([2, 2, 2])
    assert is_strong_lefschetz(A, LinearForm(FP, [1, 1, 1]))
    assert not is_strong_lefschetz(A, LinearForm(FP, [1, 0, 0]))
    table = slp_rank_table(A, LinearForm(FP, [1, 1, 1]))
    assert table[(0, 3)] == {"rank": 1, "maximal": True}
    assert table[(1, 1)]["rank"] == 3


def test_weak_lefschetz():
    A = monomial_ci([2, 2, 2])
    assert is_weak_lefschetz(A, LinearForm(FP, [1, 1, 1]))
    assert not is_weak_lefschetz(A, LinearForm(FP, [1, 1, 0]))
    verdict = has_wlp(A, seed=2)
    assert verdict.verdict and verdict.certified and verdict.witness is not None
    assert verdict.to_dict()["certified"] is True


def _sparse_form(n, rng):
    while True:
        coeffs = [0 if rng.random() < 0.3 else FP.random_element(rng, nonzero=True) for _ in range(n)]
        if any(coeffs):
            return LinearForm(FP, coeffs)


def test_parts_count_detects_weak_lefschetz():
    algebras = [monomial_ci([2, 2, 2]), monomial_ci([2, 2, 3]), monomial_ci([2, 2, 2, 2]),
                monomial_ci([3, 3, 3]), random_ci([2, 2, 3], seed=2), monomial_ci([2, 3, 4])]
    rng = make_rng(0, "parts-count")
    outcomes = set()
    for k in range(30):
        A = algebras[k % len(algebras)]
        ell = _sparse_form(A.n, rng)
        weak = is_weak_lefschetz(A, ell)
        assert (len(jordan_type(A, ell)) == max(A.hvector.values)) == weak, (A, ell.to_string())
        outcomes.add(weak)
    assert outcomes == {True, False}


def test_torus_invariance():
    rng = make_rng(0, "torus")
    for degrees in ([2, 2, 2], [2, 2, 3], [2, 3, 4], [2, 2, 2, 2]):
        A = monomial_ci(degrees)
        for _ in range(5):
            ell = _sparse_form(A.n, rng)
            scaled = LinearForm(FP, [FP.mul(c, FP.random_element(rng, nonzero=True)) for c in ell.coefficients])
            support = [j + 1 for j, c in enumerate(ell.coefficients) if c]
            assert jordan_type(A, scaled) == jordan_type(A, ell), (degrees, ell.to_string())
            assert jordan_type(A, ell) == monomial_jordan_prediction(degrees, support), (degrees, support)


def test_certified_failure():
    gens = [parse_polynomial(t, 3, FP) for t in ("x1^3", "x2^3", "x3^3", "x1*x2*x3")]
    A = GradedAlgebra(3, FP, gens)
    assert A.hvector.to_list() == [1, 3, 6, 6, 3]
    verdict = has_wlp(A, seed=0, trials=2)
    assert not verdict.verdict
    assert verdict.certified
    assert "degree 2" in verdict.reason
    try:
        has_wlp(A, trials=0)
    except ValueError:
        pass
    else:
        raise AssertionError("at least one trial is required")


def main():
    tests = [test_partition, test_dual_partition, test_monomial_prediction, test_jordan_type_matches_prediction,
             test_strong_lefschetz, test_weak_lefschetz, test_parts_count_detects_weak_lefschetz,
             test_torus_invariance, test_certified_failure]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
