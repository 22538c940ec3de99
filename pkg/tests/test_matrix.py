import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from cauchykit.field import GF, QQ
from cauchykit.matrix import (DenseMatrix, Singular, gaussian_inverse_oracle, gaussian_solve,
                              nullspace, rank)
from cauchykit.spectral import charpoly, linear_factorization, poly_gcd

import sympy


def test_constructors_and_access():
    m = DenseMatrix.from_rows([[1, 2], [3, 4]])
    assert m[1, 0] == 3 and m.col(1) == [2, 4]
    assert m.T == DenseMatrix.from_rows([[1, 3], [2, 4]])
    assert m.trace() == 5 and m.row_sums() == [3, 7] and m.col_sums() == [4, 6]
    with pytest.raises(ValueError):
        DenseMatrix.from_rows([[1], [2, 3]])
    with pytest.raises(IndexError):
        m[2, 0]


def test_inverse_and_singular():
    m = DenseMatrix.from_rows([[2, 1], [1, 1]])
    assert gaussian_inverse_oracle(m) == DenseMatrix.from_rows([[1, -1], [-1, 2]])
    with pytest.raises(Singular) as e:
        gaussian_inverse_oracle(DenseMatrix.from_rows([[1, 2], [2, 4]]))
    assert e.value.rank == 1
    assert rank(DenseMatrix.zeros(3, 3)) == 0


def test_nullspace():
    m = DenseMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert all(c == 0 for c in m.apply(v))


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices)
def test_charpoly_matches_sympy(rows):
    ours = charpoly(DenseMatrix.from_rows(rows))
    ref = sympy.Matrix(rows).charpoly().all_coeffs()[::-1]
    assert [int(c) for c in ours] == ref
    F = GF(7)
    assert [c.residue for c in charpoly(DenseMatrix.from_rows(rows, F))] == [r % 7 for r in ref]


@given(matrices)
def test_solve_against_inverse(rows):
    m = DenseMatrix.from_rows(rows)
    b = [mpq(i + 1) for i in range(m.n_rows)]
    try:
        inv = gaussian_inverse_oracle(m)
    except Singular:
        assert rank(m) < m.n_rows
        return
    assert inv @ m == DenseMatrix.identity(m.n_rows)
    assert gaussian_solve(m, b) == inv.apply(b)


def test_factorization_and_gcd():
    # (t - 2)(t - 3)(t^2 + 1)
    coeffs = [mpq(int(c)) for c in sympy.Poly(sympy.expand((sympy.Symbol("t") - 2) * (sympy.Symbol("t") - 3)
                                                       * (sympy.Symbol("t") ** 2 + 1))).all_coeffs()[::-1]]
    roots, splits = linear_factorization(coeffs, QQ)
    assert roots == {2: 1, 3: 1} and not splits
    F = GF(5)  # t^2 + 1 = (t - 2)(t - 3) mod 5
    roots5, splits5 = linear_factorization([F(c) for c in coeffs], F)
    assert splits5 and roots5 == {F(2): 2, F(3): 2}
    assert poly_gcd([mpq(-2), mpq(1)], [mpq(6), mpq(-5), mpq(1)], QQ) == [-2, 1]
    assert poly_gcd([mpq(-2), mpq(1)], [mpq(-3), mpq(1)], QQ) == [1]
