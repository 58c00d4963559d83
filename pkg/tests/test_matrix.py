"""Exact linear algebra kernel: fields, rref, solving, kernels."""

from __future__ import annotations

import random

import pytest

from quiveralg.fields import FieldSpec, FpElement
from quiveralg.matrix import Mat

QQ = FieldSpec.rationals()
F2 = FieldSpec.prime_field(2)


def test_field_spec_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime_field(4)
    with pytest.raises(ValueError):
        FieldSpec("R")
    assert FieldSpec.prime_field(7).characteristic == 7
    assert QQ.characteristic == 0


def test_rational_parse_and_str():
    x = QQ.parse("3/2")
    assert x + x == QQ.from_int(3)
    assert QQ.to_str(x) == "3/2"
    assert QQ.parse("-5") == QQ.from_int(-5)


def test_fp_arithmetic():
    a = FpElement(5, 3)
    b = FpElement(5, 4)
    assert a + b == FpElement(5, 2)
    assert a * b == FpElement(5, 2)
    assert a - b == FpElement(5, 4)
    assert (a / b) * b == a
    assert -a == FpElement(5, 2)
    assert not FpElement(5, 0)
    with pytest.raises(ValueError):
        a + FpElement(7, 1)


def test_rref_identity():
    m = Mat.identity(2, QQ)
    r, pivots = m.rref()
    assert r == m
    assert pivots == [0, 1]


def test_rref_rank_one():
    m = Mat.from_rows([[1, 2], [2, 4]], QQ)
    r, pivots = m.rref()
    assert pivots == [0]
    assert r.row_list(0) == [QQ.one(), QQ.from_int(2)]
    assert not any(r.row_list(1))


def test_rref_over_f2():
    m = Mat.from_rows([[1, 1], [1, 0]], F2)
    r, pivots = m.rref()
    assert pivots == [0, 1]
    assert r == Mat.identity(2, F2)


def test_rref_idempotent():
    m = Mat.from_rows([[2, 4, 1], [3, 1, 0], [5, 5, 1]], QQ)
    r1, _ = m.rref()
    r2, _ = r1.rref()
    assert r1 == r2


def test_solve_identity():
    b = Mat.from_rows([[3], [7]], QQ)
    x = Mat.identity(2, QQ).solve_linear(b)
    assert x == b


def test_solve_underdetermined():
    a = Mat.from_rows([[1, 1]], QQ)
    b = Mat.from_rows([[3]], QQ)
    x = a.solve_linear(b)
    assert x is not None
    assert a * x == b


def test_solve_inconsistent():
    a = Mat.from_rows([[1], [1]], QQ)
    b = Mat.from_rows([[1], [2]], QQ)
    assert a.solve_linear(b) is None


def test_solve_shape_error():
    a = Mat.from_rows([[1, 0]], QQ)
    b = Mat.from_rows([[1], [2]], QQ)
    with pytest.raises(ValueError):
        a.solve_linear(b)


def test_kernel_identity_empty():
    assert Mat.identity(3, QQ).kernel_basis() == []


def test_kernel_zero_matrix():
    basis = Mat.zero(2, 3, QQ).kernel_basis()
    assert len(basis) == 3


def test_kernel_vectors_annihilated():
    m = Mat.from_rows([[1, 2, 3]], QQ)
    basis = m.kernel_basis()
    assert len(basis) == 2
    for v in basis:
        assert (m * v).is_zero()


def test_rank_nullity_random():
    rng = random.Random(0)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Mat.from_rows(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], QQ
        )
        assert m.rank() + len(m.kernel_basis()) == cols


def test_inverse_round_trip():
    m = Mat.from_rows([[2, 1], [1, 1]], QQ)
    inv = m.inverse()
    assert inv is not None
    assert m * inv == Mat.identity(2, QQ)
    singular = Mat.from_rows([[1, 2], [2, 4]], QQ)
    assert singular.inverse() is None


def test_block_and_stack_helpers():
    a = Mat.identity(2, QQ)
    b = Mat.from_rows([[5]], QQ)
    d = Mat.block_diagonal([a, b], QQ)
    assert d.rows == 3 and d.cols == 3
    assert d.at(2, 2) == QQ.from_int(5)
    assert d.at(0, 2) == QQ.zero()
    h = Mat.hstack([a, Mat.zero(2, 1, QQ)])
    assert h.cols == 3
    v = Mat.vstack([a, Mat.zero(1, 2, QQ)])
    assert v.rows == 3


def test_vec_unvec_round_trip():
    m = Mat.from_rows([[1, 2, 3], [4, 5, 6]], QQ)
    assert Mat.unvec(m.vec(), 2, 3) == m


def test_matmul_matches_by_hand():
    a = Mat.from_rows([[1, 2], [3, 4]], QQ)
    b = Mat.from_rows([[0, 1], [1, 0]], QQ)
    assert a * b == Mat.from_rows([[2, 1], [4, 3]], QQ)
    assert (a * b).transpose() == b.transpose() * a.transpose()
