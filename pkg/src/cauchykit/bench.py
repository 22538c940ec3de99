"""Timing harness: structured Cauchy solve against a dense exact solver.

The dense reference is FLINT's exact matrix solve (through python-flint),
which is far faster than a pure-Python elimination and still cubic in n, so
the comparison is not flattered by a slow baseline.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import flint
from gmpy2 import mpq

from .cauchy import StructuredCauchy
from .field import QQ, Field
from .generate import GenConfig, Lcg64, random_data, random_vector

__all__ = ["BenchConfig", "BenchRow", "run_bench", "oracle_solve", "to_csv", "doubling_ratios"]

CSV_HEADER = ("n", "structured_us", "oracle_us", "match")


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple = (64, 128, 256, 512, 1024)
    trials: int = 1
    seed: int = 1
    field: Field = dc_field(default=QQ)
    oracle_max_n: int = 512  # dense solve above this is skipped
    method: str = "auto"

    def __post_init__(self):
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if not self.sizes:
            raise ValueError("no sizes given")
        for n in self.sizes:
            if n < 2:
                raise ValueError(f"bench sizes must be >= 2, got {n}")


@dataclass(frozen=True)
class BenchRow:
    n: int
    structured_us: float
    oracle_us: float | None
    match: bool | None


def oracle_solve(data, rhs: Sequence) -> list:
    """Dense exact solve of C y = rhs via FLINT."""
    n, fld = data.n, data.field
    x, xt = data.x, data.x_tilde
    if fld == QQ:
        M = flint.fmpq_mat(n, n, [flint.fmpq(1) / flint.fmpq(int((x[i] - xt[j]).numerator),
                                                            int((x[i] - xt[j]).denominator))
                                  for i in range(n) for j in range(n)])
        b = flint.fmpq_mat(n, 1, [flint.fmpq(int(v.numerator), int(v.denominator)) for v in rhs])
        y = M.solve(b)
        return [mpq(int(y[i, 0].p), int(y[i, 0].q)) for i in range(n)]
    p = fld.characteristic
    M = flint.nmod_mat(n, n, [int((fld.one / (x[i] - xt[j])).residue) for i in range(n) for j in range(n)], p)
    b = flint.nmod_mat(n, 1, [int(v.residue) for v in rhs], p)
    y = M.solve(b)
    return [fld.coerce(int(y[i, 0])) for i in range(n)]


def _oracle_timed(data, rhs):
    # matrix construction is excluded from the oracle's time
    n, fld = data.n, data.field
    if fld == QQ:
        M = flint.fmpq_mat(n, n, [flint.fmpq(1) / flint.fmpq(int((a - b).numerator), int((a - b).denominator))
                                  for a in data.x for b in data.x_tilde])
        B = flint.fmpq_mat(n, 1, [flint.fmpq(int(v.numerator), int(v.denominator)) for v in rhs])
        t0 = time.perf_counter()
        y = M.solve(B)
        dt = time.perf_counter() - t0
        return [mpq(int(y[i, 0].p), int(y[i, 0].q)) for i in range(n)], dt
    t0 = time.perf_counter()
    y = oracle_solve(data, rhs)
    return y, time.perf_counter() - t0


def run_bench(cfg: BenchConfig, progress=None) -> list[BenchRow]:
    rng = Lcg64(cfg.seed)
    rows = []
    for n in cfg.sizes:
        for _ in range(cfg.trials):
            data = random_data(GenConfig(n, field=cfg.field), rng)
            rhs = random_vector(n, rng, cfg.field)
            t0 = time.perf_counter()
            y = StructuredCauchy(data).solve(rhs, method=cfg.method)
            ts = time.perf_counter() - t0
            if n <= cfg.oracle_max_n:
                y_ref, to = _oracle_timed(data, rhs)
                row = BenchRow(n, ts * 1e6, to * 1e6, list(y) == list(y_ref))
            else:
                row = BenchRow(n, ts * 1e6, None, None)
            rows.append(row)
            if progress:
                progress(row)
    return rows


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.n, f"{r.structured_us:.0f}",
                    "" if r.oracle_us is None else f"{r.oracle_us:.0f}",
                    "" if r.match is None else str(r.match).lower()])
    return buf.getvalue()


def doubling_ratios(rows: Sequence[BenchRow], attr: str = "structured_us") -> dict:
    """{n: median time(2n) / median time(n)} over sizes present at both n and 2n."""
    by_n: dict = {}
    for r in rows:
        v = getattr(r, attr)
        if v is not None:
            by_n.setdefault(r.n, []).append(v)
    med = {n: sorted(v)[len(v) // 2] for n, v in by_n.items()}
    return {n: med[2 * n] / med[n] for n in sorted(med) if 2 * n in med}
