"""Integer polynomial arithmetic for the fast rational Cauchy solve.

Polynomials are lists of integers (low to high).  Large products go through
Kronecker substitution so that GMP's subquadratic multiplication does the
work; division by monic polynomials uses a Newton-iterated reversed inverse,
so every intermediate stays integral.

The entry point is :func:`solve_integer_data`, which evaluates

    y_i = alpha~_i * sum_j alpha_j b_j / (x~_i - x_j)

for integer data as  y_i = R(x~_i) / (W * q~'(x~_i)),  where R/W is the
interpolant of b_j * q~(x_j) at the nodes x_j.
"""
from __future__ import annotations

from typing import Sequence

import gmpy2
from gmpy2 import mpq, mpz

_NAIVE_CUTOFF = 8


def _pack(c: Sequence, nbytes: int) -> mpz:
    zero = bytes(nbytes)
    pos = b"".join(int(v).to_bytes(nbytes, "little") if v > 0 else zero for v in c)
    neg = b"".join(int(-v).to_bytes(nbytes, "little") if v < 0 else zero for v in c)
    return mpz(int.from_bytes(pos, "little")) - mpz(int.from_bytes(neg, "little"))


def _unpack(v: mpz, nbytes: int, n: int) -> list:
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    raw = int(v + offset).to_bytes(nbytes * n + 1, "little")
    return [mpz(int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half) for k in range(n)]


def pmul(a: Sequence, b: Sequence) -> list:
    la, lb = len(a), len(b)
    if not la or not lb:
        return []
    if min(la, lb) < _NAIVE_CUTOFF:
        r = [mpz(0)] * (la + lb - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    r[i + j] += ai * bj
        return r
    bits = (max(abs(c) for c in a).bit_length() + max(abs(c) for c in b).bit_length()
            + min(la, lb).bit_length() + 2)
    nb = (bits + 7) // 8
    return _unpack(_pack(a, nb) * _pack(b, nb), nb, la + lb - 1)


def padd(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, v in enumerate(b):
        r[i] += v
    return r


def _series_inverse(f: Sequence, k: int) -> list:
    """g with f*g = 1 mod t^k, for integer f with f[0] = 1."""
    g = [mpz(1)]
    m = 1
    while m < k:
        m = min(2 * m, k)
        e = [-c for c in pmul(f[:m], g)[:m]]
        e[0] += 2
        g = pmul(g, e)[:m]
    return g


def _rem_monic(F: list, D: list) -> list:
    """F mod D for monic integer D."""
    n, m = len(F) - 1, len(D) - 1
    if n < m:
        return F
    k = n - m + 1
    inv = _series_inverse(D[::-1], k)
    rq = pmul(F[::-1][:k], inv)[:k]
    qd = pmul(rq[::-1], D)
    return [F[i] - qd[i] for i in range(m)]


def product_tree(points: Sequence) -> list:
    """Levels of the subproduct tree; level 0 holds the linear factors."""
    levels = [[[-mpz(p), mpz(1)] for p in points]]
    while len(levels[-1]) > 1:
        cur = levels[-1]
        nxt = [pmul(cur[i], cur[i + 1]) for i in range(0, len(cur) - 1, 2)]
        if len(cur) % 2:
            nxt.append(cur[-1])
        levels.append(nxt)
    return levels


def multipoint_eval(F: list, tree: list) -> list:
    """Values of F at the leaves of ``tree`` via a remainder tree."""
    rems = [_rem_monic(F, tree[-1][0])]
    for lv in range(len(tree) - 2, -1, -1):
        rems = [_rem_monic(rems[i // 2], node) for i, node in enumerate(tree[lv])]
    return [r[0] if r else mpz(0) for r in rems]


def derivative(c: Sequence) -> list:
    return [c[k] * k for k in range(1, len(c))]


def interpolation_numerator(weights: Sequence, tree: list) -> list:
    """sum_j weights[j] * prod_{k != j} (t - x_k), combining up the tree."""
    nums = [[mpz(w)] for w in weights]
    for lv in range(len(tree) - 1):
        cur = tree[lv]
        nxt = [padd(pmul(nums[i], cur[i + 1]), pmul(nums[i + 1], cur[i]))
               for i in range(0, len(cur) - 1, 2)]
        if len(cur) % 2:
            nxt.append(nums[-1])
        nums = nxt
    return nums[0]


def alphas_integer_data(x: Sequence[int], xt: Sequence[int]):
    """(alpha, alpha~) for integer data, via multipoint evaluation."""
    tx, txt = product_tree(x), product_tree(xt)
    q, qt = tx[-1][0], txt[-1][0]
    P = multipoint_eval(qt, tx)
    Q = multipoint_eval(derivative(q), tx)
    M = multipoint_eval(q, txt)
    Qt = multipoint_eval(derivative(qt), txt)
    return [mpq(a, b) for a, b in zip(P, Q)], [mpq(a, b) for a, b in zip(M, Qt)]


def solve_integer_data(x: Sequence[int], xt: Sequence[int], rhs: Sequence) -> list:
    """Solve C y = rhs for the Cauchy matrix with integer data (x, xt)."""
    tx, txt = product_tree(x), product_tree(xt)
    q, qt = tx[-1][0], txt[-1][0]
    P = multipoint_eval(qt, tx)            # prod_k (x_j - x~_k)
    Q = multipoint_eval(derivative(q), tx)  # prod_{k != j} (x_j - x_k)
    Qt = multipoint_eval(derivative(qt), txt)
    w = [mpq(b) * mpq(p, d) for b, p, d in zip(rhs, P, Q)]
    W = mpz(1)
    for wj in w:
        W = gmpy2.lcm(W, wj.denominator)
    omega = [wj.numerator * (W // wj.denominator) for wj in w]
    R = interpolation_numerator(omega, tx)
    vals = multipoint_eval(R, txt)
    return [mpq(v, W * d) for v, d in zip(vals, Qt)]
