#!/usr/bin/env python3
"""
Tests for exact linear algebra and determinants of linear-form matrices
"""

import sys
import os
from fractions import Fraction
sys.path.append(os.path.dirname(os.path.dirname(__file__)))

import numpy as np

from leflab.exactfield import FieldSpec, make_rng
from leflab.matrix import (ExactMatrix, batch_determinant, batch_determinant_mod_p, det_linear_matrix,
                           determinant, evaluate_minors, linear_matrix_tensor, rref_rank_kernel, to_array)
from leflab.multipoly import Polynomial, parse_polynomial

F7 = FieldSpec.prime(7)
F101 = FieldSpec.prime(101)
FP = FieldSpec.prime()
Q = FieldSpec.rationals()


def test_rank_and_kernel():
    m = ExactMatrix.from_rows(F7, [[1, 2], [2, 4]])
    assert m.rank() == 1
    result = rref_rank_kernel(m)
    assert result.rank == 1 and result.pivots == [0]
    assert result.kernel == [(5, 1)]
    assert ExactMatrix.zeros(F7, 0, 3).rank() == 0


def test_rational_rank():
    m = ExactMatrix.from_rows(Q, [[Fraction(1, 2), 1], [1, 2], [0, 1]])
    assert m.rank() == 2
    assert rref_rank_kernel(m.transpose()).kernel


def test_rank_ignores_row_order():
    rng = make_rng(0, "row-permutation")
    for _ in range(50):
        rows, cols, inner = rng.randint(2, 8), rng.randint(2, 8), rng.randint(1, 5)
        left = [[rng.randrange(7) for _ in range(inner)] for _ in range(rows)]
        right = [[rng.randrange(7) for _ in range(cols)] for _ in range(inner)]
        product = [[sum(a * b for a, b in zip(row, col)) % 7 for col in zip(*right)] for row in left]
        shuffled = list(product)
        rng.shuffle(shuffled)
        original = rref_rank_kernel(ExactMatrix.from_rows(F7, product))
        permuted = rref_rank_kernel(ExactMatrix.from_rows(F7, shuffled))
        assert original.rank == permuted.rank <= min(inner, rows, cols)
        assert original.pivots == permuted.pivots
        assert len(permuted.kernel) == cols - permuted.rank


def test_matmul():
    a = ExactMatrix.from_rows(F7, [[1, 2], [3, 4]])
    b = ExactMatrix.from_rows(F7, [[0, 1], [1, 0]])
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]


def test_determinants():
    assert determinant(F7, to_array(F7, [[1, 2], [3, 4]])) == 5
    assert determinant(Q, to_array(Q, [[1, 2], [3, 4]])) == Fraction(-2)
    assert determinant(F7, to_array(F7, [[1, 2], [2, 4]])) == 0


def test_batch_determinant_agrees():
    rng = make_rng(0, "batch-det")
    mats = np.array([[[rng.randrange(101) for _ in range(4)] for _ in range(4)] for _ in range(20)], dtype=np.int64)
    fast = batch_determinant_mod_p(mats, 101)
    slow = batch_determinant(F101, mats.astype(object))
    assert [int(v) for v in fast] == [int(v) % 101 for v in slow]


def test_det_linear_matrix():
    a1 = parse_polynomial("x1", 2, FP)
    a2 = parse_polynomial("x2", 2, FP)
    det = det_linear_matrix([[a1, a2], [a2, a1]])
    assert det == parse_polynomial("x1^2 - x2^2", 2, FP)
    det_q = det_linear_matrix([[parse_polynomial("x1", 2, Q), parse_polynomial("1/2*x2", 2, Q)],
                               [parse_polynomial("x2", 2, Q), parse_polynomial("x1", 2, Q)]])
    assert det_q == parse_polynomial("x1^2 - 1/2*x2^2", 2, Q)


def _cofactor_determinant(entries):
    if len(entries) == 1:
        return entries[0][0]
    total = None
    for j, a in enumerate(entries[0]):
        term = a * _cofactor_determinant([row[:j] + row[j + 1:] for row in entries[1:]])
        total = term if total is None else (total - term if j % 2 else total + term)
    return total


def test_det_linear_matrix_matches_cofactors():
    for seed in range(100):
        rng = make_rng(seed, "linear-det")
        entries = [[Polynomial.from_dense(3, 1, FP, [FP.random_element(rng) for _ in range(3)])
                    for _ in range(4)] for _ in range(4)]
        assert det_linear_matrix(entries) == _cofactor_determinant(entries), seed


def test_evaluate_minors():
    a1 = parse_polynomial("x1", 2, FP)
    a2 = parse_polynomial("x2", 2, FP)
    zero = Polynomial.zero(2, FP)
    tensor = linear_matrix_tensor([[a1, zero], [zero, a1], [a2, a2]], 2, FP)
    coeffs = evaluate_minors(FP, tensor, [(0, 1), (0, 2), (1, 2)])
    assert [[int(c) for c in row] for row in coeffs] == [[1, 0, 0], [0, 1, 0], [0, FP.modulus - 1, 0]]


def main():
    tests = [test_rank_and_kernel, test_rational_rank, test_rank_ignores_row_order, test_matmul, test_determinants,
             test_batch_determinant_agrees, test_det_linear_matrix, test_det_linear_matrix_matches_cofactors,
             test_evaluate_minors]
    for test in tests:
        test()
        print(f"✅ {test.__name__}")
    print(f"\n{len(tests)} tests passed")


if __name__ == "__main__":
    main()
