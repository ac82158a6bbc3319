"""Command-line interface: ``orthokit {gen,compose,classify,analyze,verify}``.

Exit codes: 0 success or clean verification, 1 failed verification or
unparsable matrix file, 2 usage error (bad arguments, invalid orders,
dimension mismatches).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import analysis
from .compositions import (
    assemble_blocks,
    circulant_table,
    doubling,
    four_block,
    juxtapose,
    kronecker,
    mixed_block,
    type_ii_table,
)
from .generators import MMatrixKind, SignRule, all_ones, cycled_family, m_matrix, sylvester
from .io import SignMatrixParseError, dump_report, format_sign_matrix, parse_sign_matrix
from .matrix import classify

CENSUS_ENV = "ORTHOKIT_MAX_CENSUS_ORDER"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_matrix(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _Exit(EXIT_USAGE, f"{path}: {exc.strerror}") from exc
    try:
        return parse_sign_matrix(text)
    except SignMatrixParseError as exc:
        raise _Exit(EXIT_FAIL, f"{path}: {exc}") from exc


def _emit_matrix(m, args) -> None:
    text = format_sign_matrix(m, header=getattr(args, "header", False))
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_doc(doc: dict) -> None:
    sys.stdout.write(dump_report(doc))


def _census_guard() -> int:
    raw = os.environ.get(CENSUS_ENV)
    if raw is None:
        return analysis.DEFAULT_MAX_CENSUS_ORDER
    try:
        return int(raw)
    except ValueError:
        raise _Exit(EXIT_USAGE, f"{CENSUS_ENV} must be an integer, got {raw!r}") from None


# -- gen --------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.what == "hadamard":
        m = sylvester(args.k)
    elif args.what == "ones":
        m = all_ones(args.m)
    else:
        m = m_matrix(MMatrixKind.parse(args.type), args.n, SignRule(args.rule))
    _emit_matrix(m, args)
    return EXIT_OK


# -- compose -----------------------------------------------------------------------


def cmd_compose(args) -> int:
    op = args.op
    if op == "kron":
        out = kronecker(_read_matrix(args.a), _read_matrix(args.b))
    elif op == "juxt":
        mats = [_read_matrix(p) for p in args.files]
        counts = {p: m.shape[0] for p, m in zip(args.files, mats)}
        if len(set(counts.values())) != 1:
            detail = ", ".join(f"{p} has {c} rows" for p, c in counts.items())
            raise _Exit(EXIT_USAGE, f"row count mismatch: {detail}")
        out = juxtapose(mats)
    elif op == "double":
        out = doubling(_read_matrix(args.a))
    elif op == "fourblock":
        out = four_block(_read_matrix(args.a))
    elif op == "mixed":
        h, m = _read_matrix(args.a), _read_matrix(args.b)
        if h.shape != m.shape or h.shape[0] != h.shape[1]:
            raise _Exit(
                EXIT_USAGE,
                f"order mismatch: {args.a} is {h.shape[0]}x{h.shape[1]}, {args.b} is {m.shape[0]}x{m.shape[1]}",
            )
        out = mixed_block(h, m, args.order)
    else:  # assemble
        seed = _read_matrix(args.seed)
        if seed.shape[0] != seed.shape[1]:
            raise _Exit(EXIT_USAGE, f"{args.seed} must be square, got {seed.shape[0]}x{seed.shape[1]}")
        n = seed.shape[0]
        table = circulant_table(n) if args.table == "circulant" else type_ii_table(n)
        out = assemble_blocks(table, cycled_family(seed))
    _emit_matrix(out, args)
    return EXIT_OK


# -- classify / analyze --------------------------------------------------------------


def _groups(gs):
    return None if gs is None else [list(g) for g in gs]


def cmd_classify(args) -> int:
    m = _read_matrix(args.file)
    rep = classify(m, exhaustive_split=args.exhaustive_split)
    doc = {
        "dimensions": {"rows": int(m.shape[0]), "cols": int(m.shape[1])},
        "labels": rep.label_names,
        "groupings": {
            "quasiA": _groups(rep.quasi_a_groups),
            "quasiB": _groups(rep.quasi_b_groups),
            "quasiBConstant": rep.quasi_b_constant,
            "semiSplitIndex": rep.semi_split_index,
            "semiSplitColumns": None if rep.semi_split_columns is None else list(rep.semi_split_columns),
        },
        "witnesses": {lab.value: [list(p) for p in pairs] for lab, pairs in rep.witnesses.items()},
    }
    _emit_doc(doc)
    return EXIT_OK


def cmd_analyze(args) -> int:
    m = _read_matrix(args.file)
    census = None
    if args.census:
        census = analysis.permutation_census(m, max_order=_census_guard())
    claims = ()
    if args.construction:
        tagged = {t.name: t for t in analysis.tagged_constructions()}
        if args.construction not in tagged:
            raise _Exit(EXIT_USAGE, f"unknown construction {args.construction!r}; choose from {sorted(tagged)}")
        claims = tagged[args.construction].claims
    _emit_doc(analysis.spectrum_report(m, claims=claims, census=census))
    return EXIT_OK


# -- verify ----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    what = args.what
    if what == "mmatrix":
        rep = analysis.formula_conformance(MMatrixKind.parse(args.type), args.n, SignRule(args.rule))
        _emit_doc(analysis.conformance_document(rep))
        return EXIT_OK if rep.clean else EXIT_FAIL
    if what == "gram":
        h = _read_matrix(args.file)
        if h.shape[0] != h.shape[1]:
            raise _Exit(EXIT_USAGE, f"{args.file} must be square, got {h.shape[0]}x{h.shape[1]}")
        chk = analysis.gram_structure_check(h, args.m)
        _emit_doc(
            {
                "n": chk.n,
                "m": chk.m,
                "rowGramIsMnI": chk.rows_ok,
                "colGramIsOnesKronNI": chk.cols_ok,
                "DDt": chk.dd_t.tolist(),
                "verdict": "holds" if chk.holds else "fails",
            }
        )
        return EXIT_OK if chk.holds else EXIT_FAIL
    if what == "census":
        m = _read_matrix(args.file)
        rep = analysis.permutation_census(m, max_order=_census_guard())
        _emit_doc(analysis.spectrum_report(m, census=rep))
        ok = rep.all_same_class and rep.spectra_preserved
        return EXIT_OK if ok else EXIT_FAIL
    if what == "order":
        ok = analysis.hadamard_order_guard(args.n)
        _emit_doc({"n": args.n, "necessaryCondition": ok})
        if not ok:
            print(f"n = {args.n}: n ≢ 0 (mod 4)", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    # det
    m = _read_matrix(args.file)
    chk = analysis.determinant_check(m)
    _emit_doc({"n": int(m.shape[0]), "determinant": chk.determinant, "attainsBound": chk.attains_bound})
    return EXIT_OK if chk.attains_bound else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthokit", description="Exact sign-matrix orthogonality toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_opts(p):
        p.add_argument("--out", help="write the matrix here instead of stdout")
        p.add_argument("--header", action="store_true", help="emit a 'rows cols' header line")

    gen = sub.add_parser("gen", help="generate a base matrix")
    gsub = gen.add_subparsers(dest="what", required=True)
    p = gsub.add_parser("hadamard", help="Sylvester Hadamard matrix of order 2^k")
    p.add_argument("--k", type=int, required=True)
    out_opts(p)
    p = gsub.add_parser("ones", help="all-ones matrix")
    p.add_argument("--m", type=int, required=True)
    out_opts(p)
    p = gsub.add_parser("mmatrix", help="M-matrix from a residue table")
    p.add_argument("--type", choices=["I", "II", "III"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rule", choices=[r.value for r in SignRule], default=SignRule.PARITY.value)
    out_opts(p)
    gen.set_defaults(func=cmd_gen)

    comp = sub.add_parser("compose", help="compose matrices read from files")
    csub = comp.add_subparsers(dest="op", required=True)
    p = csub.add_parser("kron")
    p.add_argument("a")
    p.add_argument("b")
    out_opts(p)
    p = csub.add_parser("juxt")
    p.add_argument("files", nargs="+")
    out_opts(p)
    for name in ("double", "fourblock"):
        p = csub.add_parser(name)
        p.add_argument("a")
        out_opts(p)
    p = csub.add_parser("mixed")
    p.add_argument("a", help="H operand")
    p.add_argument("b", help="M operand")
    p.add_argument("--order", choices=["hm", "mh"], default="hm")
    out_opts(p)
    p = csub.add_parser("assemble")
    p.add_argument("--table", choices=["circulant", "type2"], required=True)
    p.add_argument("--seed", required=True)
    out_opts(p)
    comp.set_defaults(func=cmd_compose)

    p = sub.add_parser("classify", help="orthogonality labels with witnesses")
    p.add_argument("file")
    p.add_argument("--exhaustive-split", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", help="spectrum histograms, labels and claim conformance")
    p.add_argument("file")
    p.add_argument("--census", action="store_true", help="include the permutation census")
    p.add_argument("--construction", help="name of a tagged construction whose claims to check")
    p.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify", help="run a verification check")
    vsub = ver.add_subparsers(dest="what", required=True)
    p = vsub.add_parser("mmatrix")
    p.add_argument("--type", choices=["I", "II", "III"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rule", choices=[r.value for r in SignRule], default=SignRule.PARITY.value)
    p = vsub.add_parser("gram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("file")
    p = vsub.add_parser("census")
    p.add_argument("file")
    p = vsub.add_parser("order")
    p.add_argument("n", type=int)
    p = vsub.add_parser("det")
    p.add_argument("file")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"orthokit: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:  # OrthoError and plain bad-argument errors
        print(f"orthokit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
