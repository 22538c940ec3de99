import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from cauchykit.cauchy import (FAST_PATH_MIN_N, CauchyData, InvalidCauchyData, NotCauchy,
                              StructuredCauchy, alphas, build, canonical_data,
                              displacement_residual, entry, invert, perm_equivalent, recognize,
                              shift_data, solve)
from cauchykit.field import GF, QQ
from cauchykit.lagrange import product_ratio
from cauchykit.generate import GenConfig, Lcg64, random_data, random_vector
from cauchykit.matrix import DenseMatrix, gaussian_inverse_oracle, gaussian_solve

from strategies import cauchy_data_any, cauchy_data_gf, cauchy_data_q, small_rationals

EX = CauchyData((0, 1), (2, 3))


# frozen values for the 2x2 worked example --------------------------------------

def test_worked_example_values():
    assert build(EX) == DenseMatrix.from_rows([[mpq(-1, 2), mpq(-1, 3)], [-1, mpq(-1, 2)]])
    assert alphas(EX) == ((-6, 2), (-2, 6))
    assert invert(EX) == DenseMatrix.from_rows([[6, -4], [-12, 6]])
    assert solve(EX, [1, 1]) == [2, -6]
    assert entry(EX, 1, 0) == -1


def test_worked_example_mod_7():
    d = CauchyData((0, 1), (2, 3), GF(7))
    assert build(d) == DenseMatrix.from_rows([[3, 2], [6, 3]], GF(7))
    assert invert(d) @ build(d) == DenseMatrix.identity(2, GF(7))


def test_n1():
    d = CauchyData((mpq(1, 2),), (mpq(-3),))
    assert build(d) == DenseMatrix.from_rows([[mpq(2, 7)]])
    assert invert(d) == DenseMatrix.from_rows([[mpq(7, 2)]])
    assert alphas(d) == ((mpq(7, 2),), (mpq(-7, 2),))


def test_invalid_data():
    with pytest.raises(InvalidCauchyData):
        CauchyData((0, 1), (1, 2))
    with pytest.raises(InvalidCauchyData):
        CauchyData((0, 0), (1, 2))
    with pytest.raises(InvalidCauchyData):
        CauchyData((0,), (1, 2))
    with pytest.raises(InvalidCauchyData):
        CauchyData((), ())
    with pytest.raises(InvalidCauchyData):
        CauchyData((0, 7), (1, 2), GF(7))
    with pytest.raises(IndexError):
        entry(EX, 2, 0)
    with pytest.raises(ValueError):
        solve(EX, [1])


# properties ------------------------------------------------------------------

@given(cauchy_data_any())
def test_inverse_matches_oracle(d):
    C = build(d)
    inv = invert(d)
    assert inv @ C == DenseMatrix.identity(d.n, d.field)
    assert inv == gaussian_inverse_oracle(C)


@pytest.mark.parametrize("n,fld", [(32, QQ), (64, QQ), (64, GF(257))])
def test_inverse_matches_oracle_mid_sizes(n, fld):
    d = random_data(GenConfig(n, seed=n, field=fld))
    C = build(d)
    inv = invert(d)
    assert inv @ C == DenseMatrix.identity(n, fld)
    assert inv == gaussian_inverse_oracle(C)


@given(cauchy_data_any(), st.data())
def test_solve_matches_elimination(d, data):
    rhs = data.draw(st.lists(small_rationals, min_size=d.n, max_size=d.n))
    rhs = [d.field.coerce(v) for v in rhs]
    assert solve(d, rhs, method="direct") == gaussian_solve(build(d), rhs)


@given(cauchy_data_any())
def test_inverse_line_sums(d):
    a, at = alphas(d)
    inv = gaussian_inverse_oracle(build(d))
    assert inv.col_sums() == list(a)
    assert inv.row_sums() == [-v for v in at]


@given(cauchy_data_any())
def test_displacement_and_transpose(d):
    n, F = d.n, d.field
    assert displacement_residual(d) == DenseMatrix.from_function(n, n, lambda i, j: 1, F)
    assert build(d).T == -build(d.swapped())


@given(cauchy_data_any())
def test_alpha_sum_is_trace(d):
    a, _ = alphas(d)
    F = d.field
    assert sum(a, F.zero) == sum((u - v for u, v in zip(d.x, d.x_tilde)), F.zero)


@given(cauchy_data_any(), st.integers(-20, 20))
def test_shift_invariance(d, z):
    assert build(shift_data(d, z)) == build(d)
    assert alphas(shift_data(d, z)) == alphas(d)


@given(cauchy_data_any())
def test_recognize_round_trip(d):
    r = recognize(build(d))
    assert isinstance(r, CauchyData)
    assert build(r) == build(d)
    assert r.x_tilde[0] == 0


def test_recognize_negative_witnesses():
    ident = recognize(DenseMatrix.identity(2))
    assert isinstance(ident, NotCauchy) and not ident and ident.category == "zero_entry"
    ones = recognize(DenseMatrix.from_rows([[1, 1], [1, 1]]))
    assert ones.category == "duplicate_scalar"
    m = build(CauchyData((0, 1, 5), (2, 3, 4))).rows()
    m[2][2] += 1
    bad = recognize(DenseMatrix.from_rows(m))
    assert bad.category == "entry_mismatch" and bad.position == (2, 2)
    with pytest.raises(ValueError):
        recognize(DenseMatrix.from_rows([[1, 2]]))


# structured fast path ------------------------------------------------------------

@pytest.mark.parametrize("n", [FAST_PATH_MIN_N, 70, 97])
def test_subproduct_path_matches_direct(n):
    rng = Lcg64(n)
    d = random_data(GenConfig(n), rng)
    d = CauchyData(tuple(v / 3 for v in d.x), tuple(v / 3 + mpq(1, 7) for v in d.x_tilde))
    rhs = random_vector(n, rng)
    s = StructuredCauchy(d)
    y = s.solve(rhs, method="subproduct")
    assert y == s.solve(rhs, method="direct")
    assert s.alpha == tuple(product_ratio(d.x, d.x_tilde, i) for i in range(n))
    assert s.alpha_tilde == tuple(product_ratio(d.x_tilde, d.x, i) for i in range(n))


def test_subproduct_needs_rationals():
    with pytest.raises(ValueError):
        solve(CauchyData((0, 1), (2, 3), GF(7)), [1, 1], method="subproduct")
    with pytest.raises(ValueError):
        solve(EX, [1, 1], method="fft")


# permutation equivalence -----------------------------------------------------------

def test_perm_equivalence_examples():
    m = perm_equivalent(EX, shift_data(EX, 5))
    assert m and m.zeta == 5
    assert not perm_equivalent(EX, CauchyData((0, 1), (2, 4)))
    swapped = CauchyData((1, 0), (3, 2))
    assert perm_equivalent(EX, swapped).zeta == 0


@given(cauchy_data_any(max_n=6), st.integers(-30, 30), st.randoms(use_true_random=False))
def test_perm_equivalence_recovers_shift(d, z, rnd):
    s = shift_data(d, z)
    x, xt = list(s.x), list(s.x_tilde)
    rnd.shuffle(x)
    rnd.shuffle(xt)
    s = CauchyData(tuple(x), tuple(xt), d.field)
    m = perm_equivalent(d, s)
    assert m
    key = d.field.sort_key
    moved = shift_data(d, m.zeta)
    assert sorted(moved.x, key=key) == sorted(s.x, key=key)
    assert sorted(moved.x_tilde, key=key) == sorted(s.x_tilde, key=key)
    lab_d, lab_s = canonical_data(d), canonical_data(s)
    if lab_d is not None:
        assert lab_d == lab_s


def test_perm_equivalence_char_divides_n():
    F = GF(2)
    d = CauchyData((0,), (1,), F)
    assert perm_equivalent(d, CauchyData((1,), (0,), F)).zeta == 1
    assert canonical_data(d) is None
    # p >= 2n for valid data, so GF(2) with n = 1 is the only case with p | 2n
    assert canonical_data(CauchyData((0,), (2,), GF(3))) is not None
