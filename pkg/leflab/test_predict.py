#!/usr/bin/env python3
"""
Tests for the closed-form predictions
"""

import sys
import os
from itertools import combinations_with_replacement
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from leflab.artinian import HVector, ci_hvector
from leflab.errors import EmptySupport
from leflab.exactfield import FieldSpec
from leflab.multipoly import parse_polynomial
from leflab.predict import (GSequence, aci_dimension_counts, ci3_prediction, ci4_middle_difference, ci4_prediction,
                            codim2_gcd_analysis, codim2_prediction, conjecture_prediction, dim_gor,
                            dim_gor_difference, divisible_middle, four_lines_example, gor3_prediction,
                            is_decreasing_type, is_si_sequence, large_dn_case, macaulay_bound,
                            monomial_lefschetz_classifier, monomial_locus_summary)

FP = FieldSpec.prime()


def test_three_variables():
    p = ci3_prediction(2, 2, 3)
    assert (p.codim, p.degree, p.empty) == (2, 6, False)
    assert p.extras["n_I"] == 4
    assert (ci3_prediction(3, 2, 3).codim, ci3_prediction(3, 2, 3).degree) == (1, 5)
    assert (ci3_prediction(2, 2, 2).codim, ci3_prediction(2, 2, 2).degree) == (1, 3)
    assert ci3_prediction(2, 2, 6).degree == 4


def test_four_variables():
    p = ci4_prediction(2, 2, 2, 2)
    assert (p.codim, p.degree) == (3, 20)
    assert ci4_prediction(3, 3, 3, 3).empty
    assert ci4_prediction(3, 3, 3, 3).degree is None
    assert ci4_middle_difference(2, 2, 2, 3) == 7
    assert str(ci4_prediction(3, 3, 3, 3)) == "Empty [n4-even]"


def test_two_variables():
    p = codim2_prediction(degrees=(3, 2))
    assert (p.codim, p.degree, p.empty) == (1, 2, False)
    assert p.extras["flat_steps"] == [2]
    assert codim2_prediction(degrees=(3, 3)).empty
    assert codim2_prediction(h=HVector((1, 2, 2, 1))).extras["flat_steps"] == [2]
    try:
        codim2_prediction()
    except ValueError:
        pass
    else:
        raise AssertionError("either h or degrees is required")


def test_large_dn_cases():
    assert large_dn_case([2, 2, 2, 5]) == 1
    assert large_dn_case([2, 2, 2, 4]) == 2
    assert large_dn_case([2, 2, 2, 3]) == 3
    assert large_dn_case([2, 2, 2, 2]) == 4
    assert large_dn_case([3, 3, 3, 3]) is None


def test_conjecture_agrees_with_theorems():
    checked = 0
    for n, theorem_for in ((3, ci3_prediction), (4, ci4_prediction)):
        for degrees in combinations_with_replacement(range(2, 7), n):
            theorem = theorem_for(*degrees)
            conjecture = conjecture_prediction(degrees)
            assert conjecture.empty == theorem.empty, degrees
            assert (conjecture.codim, conjecture.degree) == (theorem.codim, theorem.degree), degrees
            checked += 1
    assert checked == 35 + 70


def test_gorenstein_agrees_on_complete_intersections():
    decreasing = 0
    for degrees in combinations_with_replacement(range(2, 6), 3):
        h = ci_hvector(degrees)
        ok, g = is_si_sequence(h)
        assert ok, degrees
        if not is_decreasing_type(g):
            continue
        decreasing += 1
        gorenstein = gor3_prediction(h)
        conjecture = conjecture_prediction(degrees)
        assert (gorenstein.empty, gorenstein.codim) == (conjecture.empty, conjecture.codim), degrees
        if gorenstein.degree is not None:
            assert gorenstein.degree == conjecture.degree, degrees
    assert decreasing > 0


def test_gorenstein_dimensions():
    assert dim_gor(HVector((1, 3, 3, 1))) == 9
    assert dim_gor(HVector((1, 2, 2, 1))) == 5
    assert dim_gor(HVector((1, 3, 5, 5, 3, 1))) == 15
    assert dim_gor(HVector((1, 3, 4, 4, 3, 1))) == 11
    assert dim_gor_difference(HVector((1, 3, 5, 5, 3, 1))) == 4
    try:
        dim_gor(HVector((1, 3, 6, 3, 1)))
    except ValueError:
        pass
    else:
        raise AssertionError("even socle degree is outside the formula")


def test_si_sequences():
    assert macaulay_bound(3, 1) == 6
    assert macaulay_bound(3, 2) == 4
    ok, g = is_si_sequence(HVector((1, 3, 6, 7, 6, 3, 1)))
    assert ok and g.to_list() == [1, 2, 3, 1]
    assert is_decreasing_type(GSequence((1, 2, 3, 1)))
    assert not is_decreasing_type(GSequence((1, 2, 1, 1)))


def test_gorenstein_predictions():
    p = gor3_prediction(HVector((1, 3, 6, 7, 6, 3, 1)))
    assert (p.codim, p.degree, p.regime) == (2, 21, "gorenstein-decreasing")
    q = gor3_prediction(HVector((1, 3, 4, 5, 4, 3, 1)))
    assert q.codim == 1 and q.degree is None and q.regime == "gorenstein-not-decreasing"
    assert str(q) == "codim 1, degree n/a [gorenstein-not-decreasing]"
    flat = gor3_prediction(HVector((1, 3, 6, 6, 3, 1)))
    assert (flat.codim, flat.degree) == (1, 6)


def test_monomial_classifier():
    assert monomial_lefschetz_classifier([2, 2, 3, 3], [1, 3, 4])
    assert not monomial_lefschetz_classifier([2, 2, 3, 3], [3, 4])
    assert not monomial_lefschetz_classifier([2, 2, 3, 3], [1, 2, 3])
    assert monomial_lefschetz_classifier([2, 5], [2])
    assert not monomial_lefschetz_classifier([2, 5], [1])
    try:
        monomial_lefschetz_classifier([2, 2], [])
    except EmptySupport:
        pass
    else:
        raise AssertionError("empty support")


def test_monomial_summary():
    p = monomial_locus_summary([2, 2, 2])
    assert (p.codim, p.degree, p.regime) == (1, 3, "monomial-case-3")
    assert p.extras["alpha"] == 1 and p.extras["middle_binomial"] == 3
    assert p.extras["defining_monomial"] == "(a1*a2*a3)^1"
    q = monomial_locus_summary([4, 4, 4])
    assert q.degree == 12 and q.extras["alpha"] == 4
    assert divisible_middle(3, 4) == {"middle": 12, "alpha": 4, "divisible": True}


def test_dimension_counts():
    assert aci_dimension_counts(3) == {"dimA": 24, "dimB": 20, "difference": 4}
    assert four_lines_example() == {"codim": 2, "degree": 6}


def test_common_factor():
    gens = [parse_polynomial("x1^2", 2, FP), parse_polynomial("x2^3", 2, FP)]
    flat = codim2_gcd_analysis(gens, 2)
    assert flat["gcd_degree"] == 2 and flat["maximal_rank_fails"]
    assert flat["gcd"] == "x1^2"
    assert flat["splits"]
    full = codim2_gcd_analysis(gens, 3)
    assert full["gcd_degree"] == 0 and not full["maximal_rank_fails"]


def main():
    tests = [test_three_variables, test_four_variables, test_two_variables, test_large_dn_cases,
             test_conjecture_agrees_with_theorems, test_gorenstein_agrees_on_complete_intersections,
             test_gorenstein_dimensions, test_si_sequences,
             test_gorenstein_predictions, test_monomial_classifier, test_monomial_summary,
             test_dimension_counts, test_common_factor]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
