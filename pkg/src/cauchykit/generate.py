"""Reproducible random inputs from a documented 64-bit LCG.

The stream is

    state <- (state * 6364136223846793005 + 1442695040888963407) mod 2**64

starting from ``state = seed``, and each draw returns the top 32 bits of the
new state.  An integer in [0, m) is ``draw % m``.  Anyone can reimplement
this and reproduce ``gen`` output bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cauchy import CauchyData
from .field import QQ, Field

__all__ = ["Lcg64", "GenConfig", "random_data", "random_vector", "random_invertible"]

_MUL = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


@dataclass
class Lcg64:
    state: int = 0

    def __post_init__(self):
        self.state &= _MASK

    def next32(self) -> int:
        self.state = (self.state * _MUL + _INC) & _MASK
        return self.state >> 32

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("bound must be positive")
        if m > 1 << 32:
            return ((self.next32() << 32) | self.next32()) % m
        return self.next32() % m


@dataclass(frozen=True)
class GenConfig:
    """Inputs for :func:`random_data`.

    Over Q the 2n scalars are distinct integers in [-spread*n, spread*n);
    over GF(p) they are distinct residues.
    """

    n: int
    seed: int = 0
    field: Field = dc_field(default=QQ)
    spread: int = 4


def random_data(cfg: GenConfig, rng: Lcg64 | None = None) -> CauchyData:
    n, fld = cfg.n, cfg.field
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = rng or Lcg64(cfg.seed)
    if fld == QQ:
        lo, width = -cfg.spread * n, 2 * cfg.spread * n
        if width < 2 * n:
            raise ValueError("spread too small for 2n distinct values")
        draw = lambda: lo + rng.below(width)
    else:
        p = fld.characteristic
        if 2 * n > p:
            raise ValueError(f"GF({p}) has fewer than 2n = {2 * n} elements")
        draw = lambda: rng.below(p)
    seen: set = set()
    vals = []
    while len(vals) < 2 * n:
        v = draw()
        if v not in seen:
            seen.add(v)
            vals.append(v)
    return CauchyData(tuple(vals[:n]), tuple(vals[n:]), fld)


def random_vector(n: int, rng: Lcg64, fld: Field = QQ, bound: int = 10) -> list:
    """Entries uniform in [-bound, bound], coerced into the field."""
    return [fld.coerce(rng.below(2 * bound + 1) - bound) for _ in range(n)]


def random_invertible(n: int, rng: Lcg64, fld: Field = QQ):
    """Unit lower times unit upper triangular with small entries."""
    from .matrix import DenseMatrix

    L = DenseMatrix.from_function(
        n, n, lambda i, j: 1 if i == j else (rng.below(7) - 3 if i > j else 0), fld)
    U = DenseMatrix.from_function(
        n, n, lambda i, j: 1 if i == j else (rng.below(7) - 3 if i < j else 0), fld)
    return L @ U
