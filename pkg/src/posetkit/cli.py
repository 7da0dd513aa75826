"""posetkit command line.

Exit codes: 0 success, 1 invalid poset, 2 verification or certificate
failure, 3 parse or usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import decomp, documents, oracle
from .core import AxiomViolation, DuplicateLabel, ElementNotInCarrier, FinitePoset, UnknownLabel, check_axioms
from .documents import CoverDocument, ParseError, PosetDocument, WitnessDocument
from .gen import KINDS, BadParams, GenSpec, generate

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_poset(path: str) -> FinitePoset:
    doc = documents.first(documents.parse(_read(path)), PosetDocument)
    if doc is None:
        raise ParseError(f"{path} holds no poset document")
    return doc.build()


# ---------------------------------------------------------------- commands


def cmd_validate(args, out: TextIO) -> int:
    doc = documents.first(documents.parse(_read(args.file)), PosetDocument)
    if doc is None:
        raise ParseError(f"{args.file} holds no poset document")
    checks, _ = check_axioms(doc.elements, doc.pairs, doc.kind)  # type: ignore[arg-type]
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        wit = f" ({','.join(c.witness)})" if c.witness else ""
        print(f"{c.axiom} {status}{wit}", file=out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_INVALID


def cmd_decompose(args, out: TextIO) -> int:
    P = _load_poset(args.file)
    method = args.method or ("perles" if args.theorem == "dilworth" else "mirsky")
    if (args.theorem == "mirsky") != (method == "mirsky"):
        raise UsageError(f"method {method!r} does not apply to theorem {args.theorem!r}")

    if args.theorem == "dilworth":
        if method == "perles" and P.n > decomp.PERLES_LIMIT:
            print(f"# perles route bypassed: n={P.n} exceeds {decomp.PERLES_LIMIT}, using matching", file=out)
            method = "matching"
        cover = decomp.chain_cover_perles(P) if method == "perles" else decomp.min_chain_cover_matching(P)
        witness = decomp.largest_antichain(P)
        bound = decomp.width(P)
        role, measure = "antichain", "width"
    else:
        cover = decomp.antichain_cover_mirsky(P)
        witness = decomp.largest_chain(P)
        bound = decomp.height(P)
        role, measure = "chain", "height"

    out.write(documents.render_cover(cover))
    out.write(documents.render_witness(witness, role))
    print(f"{measure}={bound} cover={len(cover)}", file=out)
    return EXIT_OK if bound == len(cover) == len(witness) else EXIT_FAILED


def cmd_verify(args, out: TextIO) -> int:
    P = _load_poset(args.poset_file)
    docs = documents.parse(_read(args.cover_file))
    cover_doc = documents.first(docs, CoverDocument)
    if cover_doc is None:
        raise ParseError(f"{args.cover_file} holds no cover document")
    cover = documents.cover_from_doc(P, cover_doc)
    wdoc = documents.first(documents.parse(_read(args.witness)), WitnessDocument) if args.witness else documents.first(docs, WitnessDocument)
    if args.witness and wdoc is None:
        raise ParseError(f"{args.witness} holds no witness document")

    if wdoc is None:
        report = oracle.check_cover(cover)
    else:
        w = documents.witness_from_doc(P, wdoc)
        expected = "antichain" if cover.flavor == "chain_cover" else "chain"
        if wdoc.role != expected:
            raise UsageError(f"a {wdoc.role} witness does not pair with {cover_doc.flavor}")
        if expected == "antichain":
            report = oracle.verify_antichain_vs_cover(w, cover)
        else:
            report = oracle.verify_chain_vs_antichain_cover(w, cover)
    print(report.render(), file=out)
    if not report.ok:
        return EXIT_FAILED
    if wdoc is not None:
        tag = "certificate" if len(w) == len(cover) else "bound"
        rel = "=" if len(w) == len(cover) else "<="
        print(f"{tag}: witness={len(w)} {rel} cover={len(cover)}", file=out)
    return EXIT_OK


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def cmd_hasse(args, out: TextIO) -> int:
    P = _load_poset(args.file)
    print("digraph hasse {", file=out)
    print("  rankdir=BT;", file=out)
    for lab in P.labels:
        print(f"  {_quote(lab)};", file=out)
    for x, y in P.cover_pairs():
        print(f"  {_quote(P.label(x))} -> {_quote(P.label(y))};", file=out)
    print("}", file=out)
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    spec = GenSpec(args.kind, args.n, args.seed, args.p, args.m)
    out.write(documents.render_poset(generate(spec), "cover"))
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posetkit", description="Dilworth and Mirsky decompositions of finite posets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check the order axioms of a poset document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("decompose", help="emit a minimum chain or antichain cover with its witness")
    p.add_argument("file")
    p.add_argument("--theorem", choices=["dilworth", "mirsky"], default="dilworth")
    p.add_argument("--method", choices=["perles", "matching", "mirsky"])
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a cover (and optional witness) against a poset")
    p.add_argument("poset_file")
    p.add_argument("cover_file")
    p.add_argument("--witness", help="file holding a witness document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hasse", help="print the Hasse diagram as Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("gen", help="generate a poset document")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="grid columns")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", default="1/2", help="edge probability for random_dag, e.g. 0.3 or 3/10")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except AxiomViolation as exc:
        print(f"invalid poset: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, UsageError, BadParams, DuplicateLabel, UnknownLabel, ElementNotInCarrier) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (decomp.StitchFailure, decomp.CertificateMismatch) as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
