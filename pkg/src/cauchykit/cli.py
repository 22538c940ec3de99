"""Command-line entry point: ``cauchykit <subcommand> ...``.

Exit codes: 0 success or a true verdict, 1 a false verdict (including
NotCauchy), 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import cauchy, frames, pair
from .bench import BenchConfig, doubling_ratios, run_bench, to_csv
from .cauchy import CauchyData, NotCauchy
from .field import Field, parse_field
from .generate import GenConfig, Lcg64, random_data, random_vector
from .io import Document, DocumentError, data_doc, dumps, loads, matrix_doc, pair_doc
from .matrix import DenseMatrix, Singular, gaussian_inverse_oracle

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2

_TAGS = {t.value: t for t in frames.BasisTag}
_TAGS.update({t.name: t for t in frames.BasisTag})


class InputError(Exception):
    pass


# helpers ------------------------------------------------------------------------

def _read(path: str | None) -> Document:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path!r}: {e.strerror}") from None
    doc = loads(text)
    return doc


def _expect(doc: Document, kind: str, args) -> Document:
    if doc.kind != kind:
        raise InputError(f"expected a {kind} document, got kind {doc.kind!r}")
    if args.field is not None and args.field != doc.field:
        raise InputError(f"--field {args.field} does not match document field {doc.field}")
    return doc


def _scalar(fld: Field, text: str, flag: str):
    try:
        return fld.parse(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{flag}: cannot parse scalar {text!r} in {fld}") from None


def _emit(args, payload) -> None:
    text = dumps(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _report(name: str, fld: Field, **body) -> dict:
    return {"field": fld.name, "kind": "report", "report": name, **body}


def _fmt_list(fld: Field, vals) -> list:
    return [fld.format(v) for v in vals]


# subcommands --------------------------------------------------------------------

def cmd_gen(args) -> int:
    fld = args.field or parse_field("Q")
    if args.n < 1:
        raise InputError(f"n must be >= 1, got {args.n}")
    if fld.characteristic and 2 * args.n > fld.characteristic:
        raise InputError(f"{fld} has fewer than 2n = {2 * args.n} elements")
    rng = Lcg64(args.seed)
    data = random_data(GenConfig(args.n, args.seed, fld), rng)
    rhs = random_vector(args.n, rng, fld) if args.with_rhs else None
    _emit(args, data_doc(data, rhs))
    return EXIT_OK


def cmd_build(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    _emit(args, matrix_doc(cauchy.build(doc.value)))
    return EXIT_OK


def cmd_invert(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    _emit(args, matrix_doc(cauchy.invert(doc.value)))
    return EXIT_OK


def cmd_solve(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    if doc.rhs is None:
        raise InputError("solve needs a cauchy_data document with an 'rhs' list")
    y = cauchy.solve(doc.value, doc.rhs, method=args.method)
    _emit(args, matrix_doc(DenseMatrix(len(y), 1, tuple(y), doc.field)))
    return EXIT_OK


def cmd_recognize(args) -> int:
    doc = _expect(_read(args.input), "matrix", args)
    try:
        res = cauchy.recognize(doc.value)
    except ValueError as e:
        raise InputError(str(e)) from None
    if isinstance(res, NotCauchy):
        _emit(args, _report("recognize", doc.field, cauchy=False, category=res.category,
                            detail=res.detail,
                            position=None if res.position is None else list(res.position)))
        return EXIT_FALSE
    _emit(args, data_doc(res))
    return EXIT_OK


def cmd_verify_pair(args) -> int:
    doc = _expect(_read(args.input), "pair", args)
    rep = pair.verify(doc.value)
    f = doc.field
    _emit(args, _report(
        "verify-pair", f,
        verdict=rep.verdict, witness=rep.witness,
        diagonalizable_X=rep.diagonalizable_X, diagonalizable_X_tilde=rep.diagonalizable_Xt,
        rank_delta=rep.rank_delta, spectra_in_field=rep.spectra_in_field,
        spectra_disjoint=rep.spectra_disjoint, multiplicity_free=rep.multiplicity_free,
        irreducible=rep.irreducible, irreducible_dual=rep.irreducible_dual,
        spectrum_X=_fmt_list(f, rep.spectrum_X), spectrum_X_tilde=_fmt_list(f, rep.spectrum_X_tilde)))
    return EXIT_OK if rep.verdict else EXIT_FALSE


def cmd_pair_from_data(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    _emit(args, pair_doc(pair.pair_from_data(doc.value)))
    return EXIT_OK


def cmd_affine(args) -> int:
    doc = _expect(_read(args.input), "pair", args)
    xi = _scalar(doc.field, args.xi, "--xi")
    zeta = _scalar(doc.field, args.zeta, "--zeta")
    if not xi:
        raise InputError("--xi must be nonzero")
    _emit(args, pair_doc(pair.affine_transform(doc.value, xi, zeta)))
    return EXIT_OK


def _verified_pair(doc: Document, label: str):
    rep = pair.verify(doc.value)
    if not rep.verdict:
        raise InputError(f"{label} is not a Cauchy pair: {rep.witness}")
    return doc.value


def cmd_equiv(args) -> int:
    dp = _expect(_read(args.first), "pair", args)
    dq = _expect(_read(args.second), "pair", args)
    if dp.field != dq.field or dp.value.n != dq.value.n:
        raise InputError("the two pairs must have the same size and field")
    p, q = _verified_pair(dp, "first pair"), _verified_pair(dq, "second pair")
    res = pair.is_equivalent(p, q)
    f = dp.field
    _emit(args, _report(
        "equiv", f, equivalent=res.equivalent,
        convention="second + zeta*I is isomorphic to first",
        zeta=None if res.zeta is None else f.format(res.zeta),
        phi=None if res.phi is None else matrix_doc(res.phi).to_json()["payload"]))
    return EXIT_OK if res.equivalent else EXIT_FALSE


def cmd_classify(args) -> int:
    docs = [_expect(_read(path), "pair", args) for path in args.inputs]
    fields = {d.field for d in docs}
    sizes = {d.value.n for d in docs}
    if len(fields) > 1 or len(sizes) > 1:
        raise InputError("classify needs pairs of one size over one field")
    pairs = [_verified_pair(d, f"input {k}") for k, d in enumerate(docs)]
    f = docs[0].field
    classes = pair.classify(pairs)
    out = []
    for c in classes:
        label = None if c.label is None else data_doc(c.label).to_json()["payload"]
        out.append({"label": label, "members": [args.inputs[i] for i in c.members]})
    _emit(args, _report("classify", f, classes=out))
    return EXIT_OK


def _tag(name: str):
    try:
        return _TAGS[name]
    except KeyError:
        raise InputError(f"unknown basis {name!r} (expected one of "
                         f"{', '.join(t.value for t in frames.BasisTag)})") from None


def _frame(args, doc: Document) -> frames.Frame:
    g = _scalar(doc.field, args.gamma, "--gamma")
    r = _scalar(doc.field, args.rho, "--rho")
    if not g:
        raise InputError("--gamma must be nonzero")
    if not r:
        raise InputError("--rho must be nonzero")
    return frames.Frame(doc.value, g, r)


def cmd_transition(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    _emit(args, matrix_doc(frames.transition(_frame(args, doc), _tag(args.src), _tag(args.dst))))
    return EXIT_OK


def cmd_gram(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    _emit(args, matrix_doc(frames.gram(_frame(args, doc), _tag(args.left), _tag(args.right))))
    return EXIT_OK


def identity_checks(data: CauchyData) -> dict:
    """Name -> bool for the closed-form identities of a Cauchy matrix."""
    fld, n = data.field, data.n
    x, xt = data.x, data.x_tilde
    a, at = cauchy.alphas(data)
    one, zero = fld.one, fld.zero
    C = cauchy.build(data)
    Ct = cauchy.build(data.swapped())
    inv = gaussian_inverse_oracle(C)
    checks = {
        "alpha_column_sums_one": all(
            sum((a[i] / (x[i] - xt[j]) for i in range(n)), zero) == one for j in range(n)),
        "alpha_tilde_column_sums_one": all(
            sum((at[i] / (xt[i] - x[j]) for i in range(n)), zero) == one for j in range(n)),
        "weighted_square_sums_minus_one": all(
            sum((a[i] * at[j] / ((x[i] - xt[j]) * (x[i] - xt[j])) for j in range(n)), zero) == -one
            for i in range(n)),
        "alpha_sum_equals_trace": sum(a, zero) == sum((u - v for u, v in zip(x, xt)), zero),
        "displacement_is_all_ones": cauchy.displacement_residual(data)
        == DenseMatrix.from_function(n, n, lambda i, j: 1, fld),
        "transpose_is_minus_swapped": C.T == -Ct,
        "inverse_column_sums_alpha": inv.col_sums() == list(a),
        "inverse_row_sums_minus_alpha_tilde": inv.row_sums() == [-v for v in at],
    }
    return checks


def cmd_identities(args) -> int:
    doc = _expect(_read(args.input), "cauchy_data", args)
    checks = identity_checks(doc.value)
    _emit(args, _report("identities", doc.field, all_pass=all(checks.values()), checks=checks))
    return EXIT_OK if all(checks.values()) else EXIT_FALSE


def _int_list(text: str, flag: str) -> tuple:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        bad = next(t for t in text.split(",") if not t.strip().lstrip("-").isdigit())
        raise InputError(f"{flag}: {bad!r} is not an integer") from None
    if not vals:
        raise InputError(f"{flag}: empty list")
    return vals


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes, "--sizes")
    trials_text = args.trials.strip()
    if not trials_text:
        raise InputError("--trials: empty trial count")
    try:
        trials = int(trials_text)
    except ValueError:
        raise InputError(f"--trials: {args.trials!r} is not an integer") from None
    if trials < 1:
        raise InputError(f"--trials: {trials} must be >= 1")
    fld = args.field or parse_field("Q")
    if fld.characteristic and 2 * max(sizes) > fld.characteristic:
        raise InputError(f"{fld} has fewer than 2n = {2 * max(sizes)} elements")
    try:
        cfg = BenchConfig(sizes=sizes, trials=trials, seed=args.seed, field=fld,
                          oracle_max_n=args.oracle_max_n)
    except ValueError as e:
        raise InputError(str(e)) from None
    progress = (lambda r: print(f"n={r.n} structured={r.structured_us:.0f}us "
                                f"oracle={r.oracle_us if r.oracle_us is None else round(r.oracle_us)}us "
                                f"match={r.match}", file=sys.stderr)) if args.verbose else None
    rows = run_bench(cfg, progress)
    text = to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for label, attr in (("structured", "structured_us"), ("oracle", "oracle_us")):
        for n, r in doubling_ratios(rows, attr).items():
            print(f"{label} ratio {n}->{2 * n}: {r:.2f}", file=sys.stderr)
    return EXIT_OK if all(r.match is not False for r in rows) else EXIT_FALSE


# parser ---------------------------------------------------------------------------

def _field_arg(text: str) -> Field:
    try:
        return parse_field(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown field {text!r} (use Q or gf:p)") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=None, help="Q or gf:p")
    common.add_argument("--gamma", default="1", help="index of the X~-standard basis (default 1)")
    common.add_argument("--rho", default="1", help="normalization of the invariant form (default 1)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    ap = argparse.ArgumentParser(prog="cauchykit", description="Exact Cauchy matrices and Cauchy pairs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, inputs=1):
        p = sub.add_parser(name, parents=[common], help=help_)
        if inputs == 1:
            p.add_argument("input", nargs="?", default=None, help="document path (default: stdin)")
        p.set_defaults(func=fn)
        return p

    g = add("gen", cmd_gen, "random Cauchy data", inputs=0)
    g.add_argument("n", type=int)
    g.add_argument("--with-rhs", action="store_true", help="also draw a right-hand side")
    add("build", cmd_build, "Cauchy matrix from data")
    add("invert", cmd_invert, "closed-form inverse")
    s = add("solve", cmd_solve, "solve C y = rhs")
    s.add_argument("--method", choices=("auto", "direct", "subproduct"), default="auto")
    add("recognize", cmd_recognize, "recover data from a matrix")
    add("verify-pair", cmd_verify_pair, "check the Cauchy pair conditions")
    add("pair-from-data", cmd_pair_from_data, "Cauchy pair in standard coordinates")
    a = add("affine", cmd_affine, "(xi X + zeta I, xi X~ + zeta I)")
    a.add_argument("--xi", default="1")
    a.add_argument("--zeta", default="0")
    e = add("equiv", cmd_equiv, "are two pairs equivalent?", inputs=0)
    e.add_argument("first")
    e.add_argument("second")
    c = add("classify", cmd_classify, "group pairs into equivalence classes", inputs=0)
    c.add_argument("inputs", nargs="+")
    t = add("transition", cmd_transition, "transition matrix between standard bases")
    t.add_argument("--from", dest="src", required=True)
    t.add_argument("--to", dest="dst", required=True)
    gr = add("gram", cmd_gram, "inner products between standard bases")
    gr.add_argument("--left", required=True)
    gr.add_argument("--right", required=True)
    add("identities", cmd_identities, "check the closed-form identities on data")
    b = add("bench", cmd_bench, "time structured vs dense solve (CSV)", inputs=0)
    b.add_argument("--sizes", default="64,128,256,512,1024")
    b.add_argument("--trials", default="1")
    b.add_argument("--oracle-max-n", type=int, default=512)
    b.add_argument("--verbose", action="store_true")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, DocumentError) as e:
        print(f"cauchykit: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Singular as e:
        print(f"cauchykit: error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
