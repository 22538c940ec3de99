"""The four standard bases, the invariant form and their transition matrices.

Coordinates are taken relative to an X-standard basis eps_i, so X is
diagonal and Delta has every row equal to (alpha_1, ..., alpha_n).  A frame
fixes the two remaining free scalars: the index gamma tying the X~-standard
basis to eps, and the normalization rho of the invariant form.

Conventions: a transition matrix B from basis u to basis v satisfies
v_j = sum_i B_ij u_i; a Gram matrix has B_ij = <u_i, v_j>.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cauchy import CauchyData, alphas, build
from .matrix import DenseMatrix, gaussian_inverse_oracle, gaussian_solve
from .spectral import eigenvector

__all__ = [
    "BasisTag",
    "Frame",
    "rep_X",
    "rep_Delta",
    "rep_X_tilde",
    "transition",
    "gram",
    "form_evaluate",
    "standard_basis_for_index",
    "basis_coordinates",
]


class BasisTag(enum.Enum):
    Eps = "eps"
    EpsTilde = "eps_tilde"
    EpsStar = "eps_star"
    EpsTildeStar = "eps_tilde_star"


@dataclass(frozen=True)
class Frame:
    data: CauchyData
    gamma: object = 1
    rho: object = 1

    def __post_init__(self):
        fld = self.data.field
        g, r = fld.coerce(self.gamma), fld.coerce(self.rho)
        if not g:
            raise ValueError("gamma must be nonzero")
        if not r:
            raise ValueError("rho must be nonzero")
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "rho", r)

    @property
    def field(self):
        return self.data.field

    @property
    def n(self) -> int:
        return self.data.n

    @property
    def rho_tilde(self):
        return -self.rho * self.gamma * self.gamma

    @property
    def gamma_tilde(self):
        return self.field.one / self.gamma


def rep_X(frame: Frame) -> DenseMatrix:
    return DenseMatrix.diag(frame.data.x, frame.field)


def rep_Delta(frame: Frame) -> DenseMatrix:
    alpha, _ = alphas(frame.data)
    n = frame.n
    return DenseMatrix.from_function(n, n, lambda i, j: alpha[j], frame.field)


def rep_X_tilde(frame: Frame) -> DenseMatrix:
    return rep_X(frame) - rep_Delta(frame)


def _pieces(frame: Frame):
    fld = frame.field
    a, at = alphas(frame.data)
    A, At = DenseMatrix.diag(a, fld), DenseMatrix.diag(at, fld)
    Ai = DenseMatrix.diag([fld.one / v for v in a], fld)
    Ati = DenseMatrix.diag([fld.one / v for v in at], fld)
    C = build(frame.data)
    Ct = build(frame.data.swapped())
    return A, At, Ai, Ati, C, Ct


E, ET, ES, ETS = BasisTag.Eps, BasisTag.EpsTilde, BasisTag.EpsStar, BasisTag.EpsTildeStar


def transition(frame: Frame, src: BasisTag, dst: BasisTag) -> DenseMatrix:
    """Matrix B with dst_j = sum_i B_ij src_i."""
    fld = frame.field
    if src == dst:
        return DenseMatrix.identity(frame.n, fld)
    g, r = frame.gamma, frame.rho
    one = fld.one
    A, At, Ai, Ati, C, Ct = _pieces(frame)
    table = {
        (E, ET): lambda: (C @ At).scale(-g),
        (ET, E): lambda: (Ct @ A).scale(-one / g),
        (E, ES): lambda: Ai.scale(one / r),
        (ES, E): lambda: A.scale(r),
        (E, ETS): lambda: C.scale(one / (r * g)),
        (ETS, E): lambda: (At @ Ct @ A).scale(r * g),
        (ET, ETS): lambda: Ati.scale(-one / (r * g * g)),
        (ETS, ET): lambda: At.scale(-r * g * g),
        (ES, ET): lambda: (A @ C @ At).scale(-r * g),
        (ET, ES): lambda: Ct.scale(-one / (r * g)),
        (ES, ETS): lambda: (A @ C).scale(one / g),
        (ETS, ES): lambda: (At @ Ct).scale(g),
    }
    return table[(src, dst)]()


def gram(frame: Frame, left: BasisTag, right: BasisTag) -> DenseMatrix:
    """Matrix B with B_ij = <left_i, right_j>."""
    fld = frame.field
    g, r = frame.gamma, frame.rho
    one = fld.one
    A, At, Ai, Ati, C, Ct = _pieces(frame)
    ident = DenseMatrix.identity(frame.n, fld)
    table = {
        (E, E): lambda: A.scale(r),
        (ET, ET): lambda: At.scale(-r * g * g),
        (ES, ES): lambda: Ai.scale(one / r),
        (ETS, ETS): lambda: Ati.scale(-one / (r * g * g)),
        (E, ES): lambda: ident,
        (ES, E): lambda: ident,
        (ET, ETS): lambda: ident,
        (ETS, ET): lambda: ident,
        (E, ET): lambda: (A @ C @ At).scale(-r * g),
        (ET, E): lambda: (At @ Ct @ A).scale(r * g),
        (E, ETS): lambda: (A @ C).scale(one / g),
        (ETS, E): lambda: (Ct @ A).scale(-one / g),
        (ET, ES): lambda: (At @ Ct).scale(g),
        (ES, ET): lambda: (C @ At).scale(-g),
        (ES, ETS): lambda: C.scale(one / (r * g)),
        (ETS, ES): lambda: Ct.scale(-one / (r * g)),
    }
    return table[(left, right)]()


def form_evaluate(frame: Frame, u: Sequence, v: Sequence):
    """<u, v> = u^T (rho A) v for coordinate vectors in the eps basis."""
    n = frame.n
    if len(u) != n or len(v) != n:
        raise ValueError(f"vectors must have length {n}, got {len(u)} and {len(v)}")
    fld = frame.field
    a, _ = alphas(frame.data)
    total = fld.zero
    for ui, vi, ai in zip(u, v, a):
        total += fld.coerce(ui) * ai * fld.coerce(vi)
    return frame.rho * total


def standard_basis_for_index(frame: Frame, gamma_prime) -> DenseMatrix:
    """Columns are the X~-standard basis with index gamma_prime, in eps coordinates."""
    g = frame.field.coerce(gamma_prime)
    if not g:
        raise ValueError("gamma_prime must be nonzero")
    return transition(Frame(frame.data, g, frame.rho), E, ET)


def basis_coordinates(frame: Frame, tag: BasisTag) -> DenseMatrix:
    """Columns are the vectors of basis ``tag`` in eps coordinates.

    Built from the definitions alone: eigenvectors of X~ scaled so that they
    sum to gamma * (1, ..., 1), and dual bases through the Gram matrix rho A.
    Nothing comes from the closed-form tables, so this is an independent check
    on them.
    """
    fld, n = frame.field, frame.n
    if tag == E:
        return DenseMatrix.identity(n, fld)
    a, _ = alphas(frame.data)
    G = DenseMatrix.diag([frame.rho * ai for ai in a], fld)
    if tag == ES:
        return gaussian_inverse_oracle(G)
    Xt = rep_X_tilde(frame)
    cols = [eigenvector(Xt, t) for t in frame.data.x_tilde]
    V = DenseMatrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)), fld)
    c = gaussian_solve(V, [frame.gamma] * n)
    T = V @ DenseMatrix.diag(c, fld)
    if tag == ET:
        return T
    # columns w_j with T^T G W = I
    return gaussian_inverse_oracle(T.T @ G)
