"""JSON documents: matrices, Cauchy data and pairs with exact string scalars.

Every document has the shape::

    {"field": "Q" | "GF(p)", "kind": "matrix" | "cauchy_data" | "pair",
     "payload": {...}}

Matrix payloads are ``{"n_rows", "n_cols", "entries"}`` with row-major
entries.  Cauchy data payloads are ``{"x", "x_tilde"}`` plus an optional
``"rhs"``.  Pair payloads hold two matrix payloads under ``"X"`` and
``"X_tilde"`` and an optional ``"basis_note"``.  Scalars are always strings
such as ``"-7/3"``, so no binary float ever enters.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .cauchy import CauchyData, InvalidCauchyData
from .field import Field, parse_field
from .matrix import DenseMatrix
from .pair import CauchyPair

__all__ = ["DocumentError", "Document", "parse_document", "loads", "dumps",
           "matrix_doc", "data_doc", "pair_doc"]

KINDS = ("matrix", "cauchy_data", "pair")


class DocumentError(ValueError):
    """Malformed document; ``token`` names the offending piece."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True)
class Document:
    field: Field
    kind: str
    value: Any          # DenseMatrix, CauchyData or CauchyPair
    rhs: tuple | None = None

    def to_json(self) -> dict:
        f = self.field.format
        if self.kind == "matrix":
            payload = _matrix_payload(self.value)
        elif self.kind == "cauchy_data":
            payload = {"x": [f(v) for v in self.value.x],
                       "x_tilde": [f(v) for v in self.value.x_tilde]}
            if self.rhs is not None:
                payload["rhs"] = [f(v) for v in self.rhs]
        else:
            payload = {"X": _matrix_payload(self.value.X),
                       "X_tilde": _matrix_payload(self.value.X_tilde)}
            if self.value.basis_note:
                payload["basis_note"] = self.value.basis_note
        return {"field": self.field.name, "kind": self.kind, "payload": payload}


def _matrix_payload(m: DenseMatrix) -> dict:
    return {"n_rows": m.n_rows, "n_cols": m.n_cols,
            "entries": [m.field.format(a) for a in m.entries]}


def _scalar(fld: Field, s, where: str):
    if not isinstance(s, str):
        raise DocumentError(f"{where}: scalar must be a string, got {json.dumps(s)}", json.dumps(s))
    try:
        return fld.parse(s)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"{where}: cannot parse scalar {s!r} in {fld}", s) from None


def _scalars(fld: Field, seq, where: str) -> list:
    if not isinstance(seq, list):
        raise DocumentError(f"{where}: expected a list", where)
    return [_scalar(fld, s, f"{where}[{k}]") for k, s in enumerate(seq)]


def _key(obj: dict, k: str, where: str):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object", where)
    if k not in obj:
        raise DocumentError(f"{where}: missing key {k!r}", k)
    return obj[k]


def _matrix(fld: Field, obj, where: str) -> DenseMatrix:
    r, c = _key(obj, "n_rows", where), _key(obj, "n_cols", where)
    for name, v in (("n_rows", r), ("n_cols", c)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DocumentError(f"{where}.{name}: expected a positive integer, got {json.dumps(v)}", name)
    entries = _scalars(fld, _key(obj, "entries", where), f"{where}.entries")
    if len(entries) != r * c:
        raise DocumentError(
            f"{where}.entries: {r}x{c} matrix needs {r * c} entries, got {len(entries)}", "entries")
    return DenseMatrix(r, c, tuple(entries), fld)


def parse_document(obj) -> Document:
    fld_name = _key(obj, "field", "document")
    if not isinstance(fld_name, str):
        raise DocumentError(f"document.field: expected a string, got {json.dumps(fld_name)}", "field")
    try:
        fld = parse_field(fld_name.replace(" ", ""))
    except ValueError:
        raise DocumentError(f"document.field: unknown field {fld_name!r}", fld_name) from None
    kind = _key(obj, "kind", "document")
    if kind not in KINDS:
        raise DocumentError(f"document.kind: unknown kind {kind!r} (expected one of {', '.join(KINDS)})",
                            str(kind))
    payload = _key(obj, "payload", "document")
    if kind == "matrix":
        return Document(fld, kind, _matrix(fld, payload, "payload"))
    if kind == "cauchy_data":
        x = _scalars(fld, _key(payload, "x", "payload"), "payload.x")
        xt = _scalars(fld, _key(payload, "x_tilde", "payload"), "payload.x_tilde")
        try:
            data = CauchyData(tuple(x), tuple(xt), fld)
        except InvalidCauchyData as e:
            raise DocumentError(f"payload: {e}", "x_tilde") from None
        rhs = None
        if "rhs" in payload:
            rhs = tuple(_scalars(fld, payload["rhs"], "payload.rhs"))
            if len(rhs) != data.n:
                raise DocumentError(f"payload.rhs: expected {data.n} entries, got {len(rhs)}", "rhs")
        return Document(fld, kind, data, rhs)
    X = _matrix(fld, _key(payload, "X", "payload"), "payload.X")
    Xt = _matrix(fld, _key(payload, "X_tilde", "payload"), "payload.X_tilde")
    note = payload.get("basis_note", "")
    if not isinstance(note, str):
        raise DocumentError("payload.basis_note: expected a string", "basis_note")
    try:
        pair = CauchyPair(X, Xt, basis_note=note)
    except ValueError as e:
        raise DocumentError(f"payload: {e}", "X_tilde") from None
    return Document(fld, kind, pair)


def loads(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        snippet = text[e.pos:e.pos + 20].split("\n")[0] or "<end of input>"
        raise DocumentError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg} near {snippet!r}",
                            snippet) from None
    return parse_document(obj)


def dumps(doc: Document | dict) -> str:
    obj = doc.to_json() if isinstance(doc, Document) else doc
    return json.dumps(obj, indent=2, ensure_ascii=False)


def matrix_doc(m: DenseMatrix) -> Document:
    return Document(m.field, "matrix", m)


def data_doc(d: CauchyData, rhs=None) -> Document:
    return Document(d.field, "cauchy_data", d, None if rhs is None else tuple(d.field.coerce(v) for v in rhs))


def pair_doc(p: CauchyPair) -> Document:
    return Document(p.field, "pair", p)
