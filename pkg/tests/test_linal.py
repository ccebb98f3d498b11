import random
from fractions import Fraction

import pytest

from quiverhh import linal
from quiverhh.errors import QuotientUndefined
from quiverhh.linal import Field


def test_field_parse_and_describe():
    q = Field.parse("Q")
    assert q.characteristic == 0
    assert q.describe() == "Q"
    f5 = Field.parse("fp:5")
    assert f5.characteristic == 5
    assert f5.describe() == "fp:5"
    with pytest.raises(ValueError):
        Field.parse("fp:6")
    with pytest.raises(ValueError):
        Field.parse("R")


def test_rational_arithmetic():
    q = Field(0)
    a = q.of(Fraction(2, 3))
    b = q.of(5)
    assert q.mul(a, b) == Fraction(10, 3)
    assert q.inv(a) == Fraction(3, 2)
    assert q.sub(q.add(a, b), b) == a


def test_prime_field_arithmetic():
    f7 = Field(7)
    assert f7.of(10) == 3
    assert f7.of(Fraction(1, 2)) == 4  # 2 * 4 = 8 = 1 mod 7
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    for x in range(1, 7):
        assert f7.mul(x, f7.inv(x)) == 1


def test_rref_and_rank():
    q = Field(0)
    rows = [[q.of(1), q.of(2), q.of(3)],
            [q.of(2), q.of(4), q.of(6)],
            [q.of(0), q.of(1), q.of(1)]]
    ech, pivots = linal.rref(q, rows)
    assert len(ech) == 2
    assert pivots == [0, 1]
    assert linal.rank(q, rows) == 2


def test_kernel_basis_matches_rank():
    q = Field(0)
    rng = random.Random(7)
    for _ in range(20):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[q.of(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)]
        ker = linal.kernel_basis(q, m, ncols=ncols)
        assert len(ker) == ncols - linal.rank(q, m)
        for v in ker:
            assert all(sum((r[j] * v[j] for j in range(ncols)), q.zero) == 0
                       for r in m)


def test_kernel_basis_empty_matrix():
    q = Field(0)
    ker = linal.kernel_basis(q, [], ncols=3)
    assert len(ker) == 3


def test_solve():
    q = Field(0)
    m = [[q.of(1), q.of(1)], [q.of(1), q.of(-1)]]
    sol = linal.solve(q, m, [q.of(3), q.of(1)])
    assert sol == [Fraction(2), Fraction(1)]
    assert linal.solve(q, [[q.of(1)], [q.of(1)]], [q.of(1), q.of(2)]) is None


def test_subspace_ops_and_quotient():
    q = Field(0)
    e = lambda i: linal.unit_vector(q, 3, i)
    span_a = [e(0), e(1)]
    span_b = [e(0)]
    ops = linal.subspace_ops(q, span_a, span_b)
    assert (ops.dim_a, ops.dim_b) == (2, 1)
    assert ops.dim_sum == 2
    assert ops.dim_intersection == 1
    assert len(ops.quotient_reps) == 1
    with pytest.raises(QuotientUndefined):
        linal.subspace_ops(q, [e(0)], [e(1)])


def test_sparse_rank_agrees_with_dense():
    q = Field(0)
    rng = random.Random(11)
    for _ in range(15):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[q.of(rng.choice([0, 0, 1, -1, 2])) for _ in range(ncols)]
                 for _ in range(nrows)]
        sparse = [{j: v for j, v in enumerate(r) if v != 0} for r in dense]
        sparse = [r for r in sparse if r]
        assert linal.sparse_rank(q, sparse) == linal.rank(q, dense)


def test_sparse_rank_prime_field():
    f3 = Field(3)
    rows = [{0: 1, 1: 2}, {0: 2, 1: 1}, {0: 1, 1: 1}]
    # first two rows are proportional mod 3 (2*[1,2] = [2,4] = [2,1])
    assert linal.sparse_rank(f3, rows) == 2
