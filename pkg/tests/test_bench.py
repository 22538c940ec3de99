import pytest
from gmpy2 import mpq, mpz
from hypothesis import given, strategies as st

from cauchykit import _subproduct as sp
from cauchykit.bench import BenchConfig, BenchRow, doubling_ratios, oracle_solve, run_bench, to_csv
from cauchykit.cauchy import CauchyData, invert, solve
from cauchykit.field import GF

ints = st.lists(st.integers(-10**30, 10**30), min_size=1, max_size=40)


def naive_mul(a, b):
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] += x * y
    return r


@given(ints, ints)
def test_kronecker_product(a, b):
    assert sp.pmul(a, b) == naive_mul(a, b)


@given(ints, st.lists(st.integers(-50, 50), min_size=1, max_size=20))
def test_remainder_by_monic(F, D):
    D = D + [1]
    import sympy

    def strip(c):
        c = [int(v) for v in c]
        while c and not c[-1]:
            c.pop()
        return c

    r = sp._rem_monic(list(map(mpz, F)), list(map(mpz, D)))
    t = sympy.Symbol("t")
    ref = sympy.Poly(list(reversed(F)), t).rem(sympy.Poly(list(reversed(D)), t))
    assert strip(r) == strip(ref.all_coeffs()[::-1])


@given(st.lists(st.integers(-100, 100), min_size=1, max_size=30, unique=True),
       st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=30))
def test_multipoint_eval(points, F):
    tree = sp.product_tree(points)
    vals = sp.multipoint_eval(list(map(mpz, F)), tree)
    assert vals == [sum(c * p ** k for k, c in enumerate(F)) for p in points]


def test_oracle_small_case_matches_hand_inverse():
    d = CauchyData((0, 1), (2, 3))
    assert oracle_solve(d, [mpq(1), mpq(1)]) == [2, -6] == invert(d).apply([1, 1])
    dg = CauchyData((0, 1), (2, 3), GF(7))
    assert oracle_solve(dg, [GF(7)(1), GF(7)(1)]) == solve(dg, [1, 1])


def test_run_bench_small():
    rows = run_bench(BenchConfig(sizes=(2, 4, 64), trials=2, oracle_max_n=4))
    assert [r.n for r in rows] == [2, 2, 4, 4, 64, 64]
    assert all(r.match for r in rows[:4])
    assert rows[-1].oracle_us is None and rows[-1].match is None
    csv = to_csv(rows).splitlines()
    assert csv[0] == "n,structured_us,oracle_us,match" and csv[-1].endswith(",,")


def test_bench_config_errors():
    with pytest.raises(ValueError):
        BenchConfig(trials=0)
    with pytest.raises(ValueError):
        BenchConfig(sizes=())
    with pytest.raises(ValueError):
        BenchConfig(sizes=(1,))


def test_doubling_ratios_use_medians():
    rows = [BenchRow(2, 1.0, 5.0, True), BenchRow(2, 3.0, 5.0, True), BenchRow(2, 2.0, 5.0, True),
            BenchRow(4, 8.0, None, None)]
    assert doubling_ratios(rows) == {2: 4.0}
    assert doubling_ratios(rows, "oracle_us") == {}
