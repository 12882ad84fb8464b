import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from perfrank.linal import (QQ, Echelon, ExactMatrix, FieldError, FieldSpec, kernel_rows,
                            matmul_rows, rank_rows, rref)


def det(M):
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i, j in itertools.combinations(range(n), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = Fraction(sign)
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def minor_rank(M):
    """Largest size of a nonzero minor, straight from the definition."""
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    for k in range(min(m, n), 0, -1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                if det([[M[i][j] for j in cols] for i in rows]):
                    return k
    return 0


small = st.integers(-3, 3).map(Fraction)
matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices)
def test_rank_matches_minors(M):
    assert rank_rows(M, QQ) == minor_rank(M)


@given(matrices)
def test_kernel_is_null_space(M):
    n = len(M[0])
    ker = kernel_rows(M, n, QQ)
    assert len(ker) == n - rank_rows(M, QQ)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)
    if ker:
        assert rank_rows(ker, QQ) == len(ker)


@given(matrices)
def test_rref_shape(M):
    R, piv = rref(M, QQ)
    assert len(piv) == rank_rows(M, QQ)
    for i, c in enumerate(piv):
        assert R[i][c] == 1
        assert all(R[k][c] == 0 for k in range(len(R)) if k != i)


@given(matrices, matrices)
def test_matmul_rank_bound(M, N):
    N = [r[:len(M[0])] + [Fraction(0)] * (len(M[0]) - len(r)) for r in N]
    N = (N * len(M[0]))[:len(M[0])]
    P = matmul_rows(M, N, QQ)
    assert rank_rows(P, QQ) <= min(rank_rows(M, QQ), rank_rows(N, QQ))


def test_finite_field_rank():
    F = FieldSpec(3)
    M = [[1, 2], [2, 1]]
    assert rank_rows(M, F) == 1          # det = -3 = 0 mod 3
    assert rank_rows(M, QQ) == 2
    assert F.coerce(Fraction(1, 2)) == 2
    with pytest.raises(FieldError):
        F.coerce(Fraction(1, 3))
    with pytest.raises(FieldError):
        FieldSpec(4)


def test_echelon_membership():
    E = Echelon([[1, 1, 0], [0, 1, 1]], 3, QQ)
    assert len(E) == 2
    assert E.contains([1, 2, 1])
    assert not E.contains([0, 0, 1])
    c = E.coords([2, 5, 3])
    assert [sum(ci * r[j] for ci, r in zip(c, E.rows)) for j in range(3)] == [2, 5, 3]


def test_exact_matrix_ops():
    M = ExactMatrix.from_rows([[1, 2], [3, 4]])
    I = ExactMatrix.identity(2)
    assert M @ I == M
    assert (M - M).is_zero()
    assert ExactMatrix.from_json(M.to_json()) == M
    assert M.T.tolist() == [[1, 3], [2, 4]]
