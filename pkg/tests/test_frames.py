import itertools

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from cauchykit.cauchy import CauchyData, alphas
from cauchykit.field import GF
from cauchykit.frames import (BasisTag, Frame, basis_coordinates, form_evaluate, gram, rep_Delta,
                              rep_X, rep_X_tilde, standard_basis_for_index, transition)
from cauchykit.matrix import DenseMatrix, gaussian_inverse_oracle, rank
from cauchykit.pair import pair_from_data

from strategies import cauchy_data_any, nonzero_small

E, ET, ES, ETS = BasisTag.Eps, BasisTag.EpsTilde, BasisTag.EpsStar, BasisTag.EpsTildeStar
TAGS = list(BasisTag)
EX = Frame(CauchyData((0, 1), (2, 3)))
M = DenseMatrix.from_rows


def test_worked_example():
    assert rep_Delta(EX) == M([[-6, 2], [-6, 2]])
    assert rep_X_tilde(EX) == M([[6, -2], [6, -1]])
    assert rep_X_tilde(EX) == pair_from_data(EX.data).X_tilde
    assert transition(EX, E, ET) == M([[-1, 2], [-2, 3]])
    assert transition(EX, ET, E) == M([[3, -2], [2, -1]])
    assert transition(EX, E, E) == DenseMatrix.identity(2)
    assert gram(EX, E, E) == DenseMatrix.diag([-6, 2])
    assert gram(EX, E, ES) == DenseMatrix.identity(2)
    assert gram(EX, ET, ET) == DenseMatrix.diag([2, -6])
    assert form_evaluate(EX, [1, 0], [0, 1]) == 0
    assert form_evaluate(EX, [1, 0], [1, 0]) == -6
    assert standard_basis_for_index(EX, 1).row_sums() == [1, 1]
    assert standard_basis_for_index(EX, 2) == M([[-2, 4], [-4, 6]])
    assert EX.rho_tilde == -1 and EX.gamma_tilde == 1


def test_n1_and_errors():
    f = Frame(CauchyData((0,), (5,)), gamma=3)
    assert standard_basis_for_index(f, 7) == M([[7]])
    with pytest.raises(ValueError):
        Frame(EX.data, gamma=0)
    with pytest.raises(ValueError):
        Frame(EX.data, rho=0)
    with pytest.raises(ValueError):
        standard_basis_for_index(EX, 0)
    with pytest.raises(ValueError):
        form_evaluate(EX, [1], [1, 0])


@st.composite
def frames_st(draw, max_n=5):
    d = draw(cauchy_data_any(max_n=max_n))
    in_field = nonzero_small.filter(lambda v: bool(d.field.coerce(v)))
    return Frame(d, draw(in_field), draw(in_field))


@settings(max_examples=30)
@given(frames_st())
def test_tables_match_definitions(f):
    B = {t: basis_coordinates(f, t) for t in TAGS}
    G = gram(f, E, E)
    for a, b in itertools.product(TAGS, TAGS):
        assert transition(f, a, b) == gaussian_inverse_oracle(B[a]) @ B[b]
        assert gram(f, a, b) == B[a].T @ G @ B[b]


@settings(max_examples=30)
@given(frames_st())
def test_coherence_laws(f):
    I = DenseMatrix.identity(f.n, f.field)
    T = {(a, b): transition(f, a, b) for a in TAGS for b in TAGS}
    for a, b, c in itertools.product(TAGS, repeat=3):
        assert T[a, c] == T[a, b] @ T[b, c]
    for a, b in itertools.product(TAGS, repeat=2):
        assert T[a, b] @ T[b, a] == I
        assert gram(f, a, b) == gram(f, b, a).T
        assert gram(f, a, b) == gram(f, a, a) @ T[a, b]
    for a in TAGS:
        g = gram(f, a, a)
        assert g.is_diagonal() and all(g[i, i] for i in range(f.n))


@settings(max_examples=30)
@given(frames_st(), st.data())
def test_invariance_and_norms(f, data):
    F, n = f.field, f.n
    G = gram(f, E, E)
    for m in (rep_X(f), rep_X_tilde(f)):
        assert m.T @ G == G @ m
    a, at = alphas(f.data)
    assert {gram(f, E, E)[i, i] / a[i] for i in range(n)} == {f.rho}
    assert {gram(f, ET, ET)[i, i] / at[i] for i in range(n)} == {f.rho_tilde}
    u = [F.coerce(v) for v in data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))]
    v = [F.coerce(w) for w in data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))]
    Xt = rep_X_tilde(f)
    assert form_evaluate(f, Xt.apply(u), v) == form_evaluate(f, u, Xt.apply(v))
    assert rank(rep_Delta(f)) == 1


@settings(max_examples=30)
@given(frames_st())
def test_cosine_squared(f):
    """<e_i, e~_j>^2 / (|e_i|^2 |e~_j|^2) = -alpha_i alpha~_j / (x_i - x~_j)^2."""
    x, xt = f.data.x, f.data.x_tilde
    a, at = alphas(f.data)
    g, ge, gt = gram(f, E, ET), gram(f, E, E), gram(f, ET, ET)
    for i in range(f.n):
        for j in range(f.n):
            lhs = g[i, j] * g[i, j] / (ge[i, i] * gt[j, j])
            assert lhs == -a[i] * at[j] / ((x[i] - xt[j]) * (x[i] - xt[j]))


@settings(max_examples=30)
@given(frames_st(), nonzero_small)
def test_standard_basis_sums(f, gp):
    gp = f.field.coerce(gp)
    if not gp:
        return
    T = standard_basis_for_index(f, gp)
    assert T.row_sums() == [gp] * f.n
    assert T == transition(f, E, ET).scale(gp / f.gamma)
