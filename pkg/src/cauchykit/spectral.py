"""Characteristic polynomials, exact root extraction and eigenvectors.

Characteristic polynomials come from a Hessenberg reduction, which works in
any field.  Splitting into linear factors is delegated to sympy's exact
factorization over Q or GF(p).
"""
from __future__ import annotations

from typing import Sequence

import sympy
from gmpy2 import mpq

from .field import QQ, Field
from .matrix import DenseMatrix, nullspace

_T = sympy.Symbol("t")


def charpoly(m: DenseMatrix) -> list:
    """Coefficients (low to high, monic) of det(t I - m)."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    fld, n = m.field, m.n_rows
    H = m.rows()
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if H[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[piv], H[c + 1] = H[c + 1], H[piv]
            for r in H:
                r[piv], r[c + 1] = r[c + 1], r[piv]
        t = H[c + 1][c]
        for i in range(c + 2, n):
            u = H[i][c] / t
            if not u:
                continue
            H[i] = [a - u * b for a, b in zip(H[i], H[c + 1])]
            for r in H:
                r[c + 1] += u * r[i]
    zero, one = fld.zero, fld.one
    polys = [[one]]
    for k in range(n):
        prev = polys[k]
        p = [zero] + prev  # t * p_{k}
        for d, a in enumerate(prev):
            p[d] -= H[k][k] * a
        t = one
        for i in range(1, k + 1):
            t = t * H[k - i + 1][k - i]
            coef = t * H[k - i][k]
            if coef:
                for d, a in enumerate(polys[k - i]):
                    p[d] -= coef * a
        polys.append(p)
    return polys[n]


def _to_sympy(coeffs: Sequence, fld: Field) -> sympy.Poly:
    high_first = list(reversed(coeffs))
    if fld == QQ:
        return sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in high_first],
                          _T, domain="QQ")
    return sympy.Poly([int(c.residue) for c in high_first], _T, modulus=fld.characteristic)


def linear_factorization(coeffs: Sequence, fld: Field):
    """Factor a monic polynomial over the field.

    Returns ``(roots, splits)`` where ``roots`` maps each root in the field to
    its multiplicity and ``splits`` says whether all irreducible factors are
    linear.
    """
    poly = _to_sympy(coeffs, fld)
    _, factors = poly.factor_list()
    roots: dict = {}
    splits = True
    for f, mult in factors:
        if f.degree() != 1:
            splits = False
            continue
        a, b = f.all_coeffs()
        if fld == QQ:
            q = -sympy.Rational(b) / sympy.Rational(a)
            r = mpq(int(q.p), int(q.q))
        else:
            r = fld.coerce(-int(b)) / fld.coerce(int(a))
        roots[r] = roots.get(r, 0) + mult
    return roots, splits


def poly_gcd(a: Sequence, b: Sequence, fld: Field) -> list:
    """Monic gcd of two coefficient lists over the field."""
    def strip(p):
        p = list(p)
        while p and not p[-1]:
            p.pop()
        return p

    a, b = strip(a), strip(b)
    while b:
        while len(a) >= len(b):
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for k, c in enumerate(b):
                a[k + shift] -= f * c
            a = strip(a)
            if not a:
                break
        a, b = b, a
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def eigenvector(m: DenseMatrix, theta) -> list | None:
    """The eigenvector for ``theta`` when that eigenspace is a line; else None."""
    n = m.n_rows
    shifted = m - DenseMatrix.identity(n, m.field).scale(theta)
    basis = nullspace(shifted)
    if len(basis) != 1:
        return None
    v = basis[0]
    lead = next(c for c in v if c)
    return [c / lead for c in v]


def annihilated_by_distinct_roots(m: DenseMatrix, roots) -> bool:
    """prod_theta (m - theta I) == 0, i.e. m is diagonalizable with this spectrum."""
    n = m.n_rows
    ident = DenseMatrix.identity(n, m.field)
    acc = ident
    for theta in roots:
        acc = acc @ (m - ident.scale(theta))
    return all(not a for a in acc.entries)
