"""Lagrange interpolation and the unit-sum linear system.

The unit-sum system asks for weights l_i with

    sum_i l_i / (a_i - b_j) = 1      for every j,

and has the closed-form solution

    l_i = prod_k (a_i - b_k) / prod_{k != i} (a_i - a_k).

The same product pattern gives the Cauchy scalings alpha and alpha-tilde.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .field import Field, field_of

#: Degree of the zero polynomial.
ZERO_DEGREE = -math.inf


class DuplicateNodes(ValueError):
    """Raised when interpolation nodes (or system scalars) repeat."""


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; ``coefficients[k]`` multiplies lambda**k.

    Trailing zeros are stripped on construction so equal polynomials compare
    equal.
    """

    coefficients: tuple

    def __post_init__(self):
        c = list(self.coefficients)
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def coefficient(self, k: int):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, t):
        acc = t - t
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coefficients]})"


def _check_nodes(nodes: Sequence, values: Sequence | None = None):
    if not nodes:
        raise ValueError("need at least one node")
    if values is not None and len(values) != len(nodes):
        raise ValueError(f"{len(nodes)} nodes but {len(values)} values")
    seen = set()
    for c in nodes:
        if c in seen:
            raise DuplicateNodes(f"repeated node {c}")
        seen.add(c)


def _barycentric_weights(nodes: Sequence) -> list:
    """1 / prod_{k != i} (c_i - c_k) for every i."""
    one = field_of(nodes[0]).one
    out = []
    for i, ci in enumerate(nodes):
        p = one
        for k, ck in enumerate(nodes):
            if k != i:
                p = p * (ci - ck)
        out.append(one / p)
    return out


def _node_polynomial(nodes: Sequence, field: Field) -> list:
    """Coefficients (low to high) of prod_k (lambda - c_k)."""
    q = [field.one]
    for c in nodes:
        nxt = [field.zero] * (len(q) + 1)
        for k, a in enumerate(q):
            nxt[k + 1] += a
            nxt[k] -= c * a
        q = nxt
    return q


def lagrange_interpolate(nodes: Sequence, values: Sequence) -> Polynomial:
    """The unique polynomial of degree < n through ``(nodes[i], values[i])``.

    Built as sum_i values[i] * prod_{k != i} (lambda - c_k) / (c_i - c_k) in
    O(n^2) field operations: one master product, then a synthetic division by
    each (lambda - c_i).
    """
    _check_nodes(nodes, values)
    field = field_of(nodes[0])
    nodes = [field.coerce(c) for c in nodes]
    values = [field.coerce(d) for d in values]
    n = len(nodes)
    q = _node_polynomial(nodes, field)
    out = [field.zero] * n
    for ci, di, wi in zip(nodes, values, _barycentric_weights(nodes)):
        scale = di * wi
        if not scale:
            continue
        # q / (lambda - ci), high to low
        carry = field.zero
        for k in range(n, 0, -1):
            carry = q[k] + carry * ci
            out[k - 1] += scale * carry
    return Polynomial(tuple(out))


def leading_coefficient(nodes: Sequence, values: Sequence):
    """Coefficient of lambda**(n-1) in the Lagrange polynomial, without building it."""
    _check_nodes(nodes, values)
    field = field_of(nodes[0])
    nodes = [field.coerce(c) for c in nodes]
    total = field.zero
    for d, w in zip(values, _barycentric_weights(nodes)):
        total += field.coerce(d) * w
    return total


def product_ratio(a: Sequence, b: Sequence, i: int):
    """prod_k (a_i - b_k) / prod_{k != i} (a_i - a_k)."""
    ai = a[i]
    one = field_of(ai).one
    num = one
    for bk in b:
        num = num * (ai - bk)
    den = one
    for k, ak in enumerate(a):
        if k != i:
            den = den * (ai - ak)
    return num / den


def solve_unit_sum_system(a: Sequence, b: Sequence) -> list:
    """Unique solution of sum_i l_i / (a_i - b_j) = 1 (j = 0..n-1)."""
    if len(a) != len(b):
        raise ValueError(f"|a| = {len(a)} but |b| = {len(b)}")
    _check_nodes(list(a) + list(b))
    field = field_of(a[0])
    a = [field.coerce(v) for v in a]
    b = [field.coerce(v) for v in b]
    return [product_ratio(a, b, i) for i in range(len(a))]
