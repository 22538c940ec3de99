"""Cauchy pairs: verification, construction from data, and classification.

A Cauchy pair is (X, X~) with both operators diagonalizable, X - X~ of rank
one, and no common invariant subspace other than 0 and V.  Everything here is
decided with exact arithmetic.

Irreducibility uses the following test.  Let eta span the image of
Delta = X - X~ and expand it in an eigenbasis of X.  Every coordinate is
nonzero exactly when no proper invariant subspace exists: a common invariant
W with Delta W = 0 would hold a common eigenvector (impossible for disjoint
spectra), and Delta W != 0 puts eta in W, which then contains every
eigencomponent of eta.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .cauchy import CauchyData, alphas, canonical_data, perm_equivalent
from .field import Field
from .matrix import DenseMatrix, gaussian_inverse_oracle, gaussian_solve, rank
from .spectral import (annihilated_by_distinct_roots, charpoly, eigenvector,
                       linear_factorization, poly_gcd)

__all__ = [
    "CauchyPair",
    "UnverifiedPair",
    "VerificationReport",
    "Isomorphism",
    "Equivalence",
    "EquivalenceClass",
    "verify",
    "eigenvalue_data",
    "associated_matrix",
    "pair_from_data",
    "affine_transform",
    "conjugate",
    "delta_trace",
    "is_isomorphic",
    "is_equivalent",
    "classify",
]


class UnverifiedPair(ValueError):
    """An operation needed a verified Cauchy pair and did not get one."""


@dataclass(frozen=True)
class CauchyPair:
    X: DenseMatrix
    X_tilde: DenseMatrix
    basis_note: str = dc_field(default="", compare=False)

    def __post_init__(self):
        X, Xt = self.X, self.X_tilde
        if not X.is_square or not Xt.is_square:
            raise ValueError("both operators must be square")
        if X.n_rows != Xt.n_rows:
            raise ValueError(f"size mismatch: {X.n_rows} vs {Xt.n_rows}")
        if X.field != Xt.field:
            raise ValueError(f"field mismatch: {X.field} vs {Xt.field}")

    @property
    def n(self) -> int:
        return self.X.n_rows

    @property
    def field(self) -> Field:
        return self.X.field

    @property
    def delta(self) -> DenseMatrix:
        return self.X - self.X_tilde

    @cached_property
    def report(self) -> "VerificationReport":
        return _verify(self)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :func:`verify`.

    ``irreducible_dual`` repeats the irreducibility test with X~ in place of
    X; it is implied by the other flags and kept as a consistency check.
    ``spectrum_X`` / ``spectrum_X_tilde`` are sorted when the characteristic
    polynomial splits, otherwise empty.
    """

    diagonalizable_X: bool
    diagonalizable_Xt: bool
    rank_delta: int
    spectra_in_field: bool
    spectra_disjoint: bool
    multiplicity_free: bool
    irreducible: bool
    irreducible_dual: bool
    verdict: bool
    witness: str | None = None
    spectrum_X: tuple = ()
    spectrum_X_tilde: tuple = ()


def _spectrum(m: DenseMatrix):
    """(sorted distinct roots, multiplicities, splits, diagonalizable)."""
    fld = m.field
    roots, splits = linear_factorization(charpoly(m), fld)
    ordered = sorted(roots, key=fld.sort_key)
    diag = splits and annihilated_by_distinct_roots(m, ordered)
    return ordered, [roots[r] for r in ordered], splits, diag


def _eigenbasis(m: DenseMatrix, roots: Sequence) -> DenseMatrix | None:
    cols = []
    for theta in roots:
        v = eigenvector(m, theta)
        if v is None:
            return None
        cols.append(v)
    n = m.n_rows
    return DenseMatrix(n, n, tuple(cols[j][i] for i in range(n) for j in range(n)), m.field)


def _eta(delta: DenseMatrix) -> list | None:
    for j in range(delta.n_cols):
        c = delta.col(j)
        if any(c):
            return c
    return None


def _eta_components_nonzero(m: DenseMatrix, roots: Sequence, eta: list) -> bool:
    basis = _eigenbasis(m, roots)
    if basis is None:
        return False
    return all(gaussian_solve(basis, eta))


def _verify(p: CauchyPair) -> VerificationReport:
    fld = p.field
    rx, mx, split_x, diag_x = _spectrum(p.X)
    rt, mt, split_t, diag_t = _spectrum(p.X_tilde)
    in_field = split_x and split_t
    mult_free = in_field and all(k == 1 for k in mx + mt)
    disjoint = len(poly_gcd(charpoly(p.X), charpoly(p.X_tilde), fld)) == 1
    delta = p.delta
    r = rank(delta)
    eta = _eta(delta)
    irreducible = dual = False
    if mult_free and r == 1 and eta is not None:
        irreducible = _eta_components_nonzero(p.X, rx, eta)
        dual = _eta_components_nonzero(p.X_tilde, rt, eta)

    checks = [
        (split_x, "characteristic polynomial of X does not split over the field"),
        (split_t, "characteristic polynomial of X~ does not split over the field"),
        (diag_x, "X is not diagonalizable"),
        (diag_t, "X~ is not diagonalizable"),
        (mult_free, "an eigenvalue is repeated"),
        (disjoint, "X and X~ share an eigenvalue"),
        (r == 1, f"rank(X - X~) = {r}, not 1"),
        (irreducible, "an X-eigencomponent of the image vector of X - X~ vanishes"),
        (dual, "an X~-eigencomponent of the image vector of X - X~ vanishes"),
    ]
    witness = next((msg for ok, msg in checks if not ok), None)
    return VerificationReport(
        diagonalizable_X=diag_x,
        diagonalizable_Xt=diag_t,
        rank_delta=r,
        spectra_in_field=in_field,
        spectra_disjoint=disjoint,
        multiplicity_free=mult_free,
        irreducible=irreducible,
        irreducible_dual=dual,
        verdict=witness is None,
        witness=witness,
        spectrum_X=tuple(rx) if split_x else (),
        spectrum_X_tilde=tuple(rt) if split_t else (),
    )


def verify(p: CauchyPair) -> VerificationReport:
    return p.report


def _require_verified(p: CauchyPair):
    rep = p.report
    if not rep.verdict:
        raise UnverifiedPair(f"not a Cauchy pair: {rep.witness}")
    return rep


def eigenvalue_data(p: CauchyPair) -> CauchyData:
    """Spectra of X and X~, each sorted by the field's scalar order."""
    rep = _require_verified(p)
    return CauchyData(rep.spectrum_X, rep.spectrum_X_tilde, p.field)


def associated_matrix(p: CauchyPair) -> CauchyData:
    """Data of the Cauchy matrix associated with ``p`` (sorted indexing)."""
    return eigenvalue_data(p)


def pair_from_data(data: CauchyData) -> CauchyPair:
    """X = diag(x), X~_ij = x_i delta_ij - alpha_j: the pair in standard coordinates."""
    fld, n = data.field, data.n
    alpha, _ = alphas(data)
    X = DenseMatrix.diag(data.x, fld)
    Xt = DenseMatrix.from_function(
        n, n, lambda i, j: (data.x[i] if i == j else fld.zero) - alpha[j], fld)
    return CauchyPair(X, Xt, basis_note="standard X-eigenbasis")


def affine_transform(p: CauchyPair, xi, zeta) -> CauchyPair:
    """(xi X + zeta I, xi X~ + zeta I)."""
    fld = p.field
    xi, zeta = fld.coerce(xi), fld.coerce(zeta)
    if not xi:
        raise ValueError("xi must be nonzero")
    shift = DenseMatrix.identity(p.n, fld).scale(zeta)
    return CauchyPair(p.X.scale(xi) + shift, p.X_tilde.scale(xi) + shift,
                      basis_note=p.basis_note)


def conjugate(p: CauchyPair, g: DenseMatrix) -> CauchyPair:
    """(g X g^-1, g X~ g^-1); raises Singular if g is not invertible."""
    gi = gaussian_inverse_oracle(g)
    return CauchyPair(g @ p.X @ gi, g @ p.X_tilde @ gi, basis_note="conjugated")


def delta_trace(p: CauchyPair):
    return p.delta.trace()


# isomorphism and equivalence ----------------------------------------------------

@dataclass(frozen=True)
class Isomorphism:
    """``phi`` satisfies phi X_p = X_q phi and phi X~_p = X~_q phi."""

    isomorphic: bool
    phi: DenseMatrix | None = None
    reason: str | None = None

    def __bool__(self):
        return self.isomorphic


@dataclass(frozen=True)
class Equivalence:
    """``zeta`` makes q + zeta I isomorphic to p.

    ``phi`` maps p to the shifted q: phi X_p = (X_q + zeta I) phi, and the
    same for X~.
    """

    equivalent: bool
    zeta: object = None
    phi: DenseMatrix | None = None

    def __bool__(self):
        return self.equivalent


def _check_compatible(p: CauchyPair, q: CauchyPair):
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    if p.field != q.field:
        raise ValueError(f"field mismatch: {p.field} vs {q.field}")


def is_isomorphic(p: CauchyPair, q: CauchyPair) -> Isomorphism:
    """Decide p ~ q and build the change of basis.

    In X-eigencoordinates any isomorphism is diagonal, S = diag(s), and must
    carry the rank-one Delta of p to that of q.  Column 0 fixes s up to the
    global scalar, which is chosen so that s_0 = 1.
    """
    _check_compatible(p, q)
    rp, rq = _require_verified(p), _require_verified(q)
    if rp.spectrum_X != rq.spectrum_X or rp.spectrum_X_tilde != rq.spectrum_X_tilde:
        return Isomorphism(False, reason="eigenvalue data differ")
    fld, n = p.field, p.n
    Vp = _eigenbasis(p.X, rp.spectrum_X)
    Vq = _eigenbasis(q.X, rq.spectrum_X)
    Vp_inv, Vq_inv = gaussian_inverse_oracle(Vp), gaussian_inverse_oracle(Vq)
    Dp = Vp_inv @ p.delta @ Vp
    Dq = Vq_inv @ q.delta @ Vq
    if not all(Dp[i, 0] for i in range(n)):
        return Isomorphism(False, reason="degenerate Delta components")
    s = [Dq[i, 0] / Dp[i, 0] for i in range(n)]
    if not all(s):
        return Isomorphism(False, reason="Delta components cannot be matched")
    S = DenseMatrix.diag(s, fld)
    if S @ Dp != Dq @ S:
        return Isomorphism(False, reason="Delta components cannot be matched")
    phi = Vq @ S @ Vp_inv
    if phi @ p.X != q.X @ phi or phi @ p.X_tilde != q.X_tilde @ phi:
        return Isomorphism(False, reason="witness failed direct check")
    return Isomorphism(True, phi)


def is_equivalent(p: CauchyPair, q: CauchyPair) -> Equivalence:
    """Is some shift q + zeta I isomorphic to p?"""
    _check_compatible(p, q)
    dp, dq = eigenvalue_data(p), eigenvalue_data(q)
    m = perm_equivalent(dq, dp)
    if not m:
        return Equivalence(False)
    iso = is_isomorphic(p, affine_transform(q, 1, m.zeta))
    if not iso:
        return Equivalence(False)
    return Equivalence(True, m.zeta, iso.phi)


@dataclass(frozen=True)
class EquivalenceClass:
    """Indices into the classified list; ``label`` is None when no canonical form exists."""

    label: CauchyData | None
    members: tuple


def classify(pairs: Sequence[CauchyPair]) -> list[EquivalenceClass]:
    """Partition pairs into equivalence classes, in order of first appearance."""
    pairs = list(pairs)
    if not pairs:
        return []
    for q in pairs[1:]:
        _check_compatible(pairs[0], q)
    datas = [eigenvalue_data(p) for p in pairs]
    labels = [canonical_data(d) for d in datas]
    groups: list[list[int]] = []
    if labels[0] is not None:
        index: dict = {}
        for i, lab in enumerate(labels):
            key = (lab.x, lab.x_tilde)
            if key not in index:
                index[key] = len(groups)
                groups.append([])
            groups[index[key]].append(i)
        return [EquivalenceClass(labels[g[0]], tuple(g)) for g in groups]
    for i, d in enumerate(datas):
        for g in groups:
            if perm_equivalent(datas[g[0]], d):
                g.append(i)
                break
        else:
            groups.append([i])
    return [EquivalenceClass(None, tuple(g)) for g in groups]
