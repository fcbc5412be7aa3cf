"""Command-line interface.

Exit codes: 0 when the requested verdict was computed (whatever it is),
1 when a proof check or the verification battery reports failures, and
2 for usage problems — parse errors, unknown names, or a comparison the
criteria do not cover. Output is deterministic: two runs of the same
command are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reports
from .corpus import Corpus, load_corpus
from .criteria import CriterionInapplicable, qnt_matrix, quasi_triviality, triviality
from .characterize import characterize
from .decision import is_theorem
from .formula import SchemaEntry
from .proofs import check_proof, load_proof_file
from .semantics import BudgetError, is_tautology
from .syntax import ParseError, parse_formula, print_formula
from .verify import conjecture_report, run_verification


class UsageError(Exception):
    pass


def _resolve(text: str, corpus: Corpus) -> SchemaEntry:
    """A corpus name if it matches one exactly, else parsed formula text."""
    if text in corpus:
        return corpus[text]
    try:
        body = parse_formula(text)
    except ParseError as exc:
        if any(ch in text for ch in "()!&|<->,"):
            raise
        raise UsageError(
            f"unknown schema name {text!r}; known names: "
            + ", ".join(corpus.names())
        ) from exc
    return SchemaEntry.make(print_formula(body), body)


def _emit(args: argparse.Namespace, payload: object, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_taut(args: argparse.Namespace, corpus: Corpus) -> int:
    entry = _resolve(args.formula, corpus)
    verdict = is_tautology(entry.body)
    _emit(
        args,
        {"command": "taut", "formula": print_formula(entry.body), **reports.jsonable(verdict)},
        reports.taut_text(verdict),
    )
    return 0


def _cmd_theorem(args: argparse.Namespace, corpus: Corpus) -> int:
    entry = _resolve(args.formula, corpus)
    verdict = is_theorem(entry.body)
    payload = reports.jsonable(verdict)
    payload["command"] = "theorem"
    payload["formula"] = print_formula(entry.body)
    _emit(args, payload, reports.theorem_text(verdict))
    return 0


def _cmd_nontrivial(args: argparse.Namespace, corpus: Corpus) -> int:
    subject = _resolve(args.schema, corpus)
    reference = _resolve(args.ref, corpus)
    report = triviality(subject, reference)
    payload = reports.jsonable(report)
    payload["command"] = "nontrivial"
    _emit(args, payload, reports.triviality_text(report))
    return 0


def _cmd_qnt(args: argparse.Namespace, corpus: Corpus) -> int:
    left = _resolve(args.left, corpus)
    right = _resolve(args.right, corpus)
    report = quasi_triviality(left, right)
    payload = reports.jsonable(report)
    payload["command"] = "qnt"
    _emit(args, payload, reports.qnt_text(report))
    return 0


def _cmd_matrix(args: argparse.Namespace, corpus: Corpus) -> int:
    if args.corpus is not None:
        source = load_corpus(Path(args.corpus))
        entries = tuple(source[name] for name in source.names())
    else:
        entries = corpus.established_five()
    cells = qnt_matrix(entries)
    payload = {
        "command": "matrix",
        "entries": [e.name for e in entries],
        "cells": {
            f"{a}|{b}": reports.qnt_summary(cell) for (a, b), cell in cells.items()
        },
    }
    _emit(args, payload, reports.matrix_text(cells))
    return 0


def _cmd_characteristic(args: argparse.Namespace, corpus: Corpus) -> int:
    entry = _resolve(args.schema, corpus)
    report = characterize(entry, max_pool=args.max_pool)
    payload = reports.jsonable(report)
    payload["command"] = "characteristic"
    _emit(args, payload, reports.characterization_text(report))
    return 0


def _cmd_check_proof(args: argparse.Namespace, corpus: Corpus) -> int:
    result = check_proof(load_proof_file(args.file))
    payload = reports.jsonable(result)
    payload["command"] = "check-proof"
    _emit(args, payload, reports.proof_check_text(result))
    return 0 if result.ok else 1


def _cmd_verify(args: argparse.Namespace, corpus: Corpus) -> int:
    report = run_verification(corpus)
    payload = reports.jsonable(report)
    payload["command"] = "verify"
    _emit(args, payload, reports.verification_text(report))
    return 0 if report.ok else 1


def _cmd_conjectures(args: argparse.Namespace, corpus: Corpus) -> int:
    rows = conjecture_report(corpus)
    payload = {
        "command": "conjectures",
        "rows": [reports.jsonable(row) for row in rows],
    }
    _emit(args, payload, reports.conjecture_text(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="l1ax",
        description=(
            "Decision procedures for single axiom schemata of the "
            "propositional ontology L1: tautology and validity checking, "
            "triviality and quasi-triviality comparisons, axiom recovery, "
            "and a machine-checked regression battery."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit the JSON report shape"
    )
    common.add_argument(
        "--corpus-file",
        metavar="FILE",
        default=None,
        help="use a schema file instead of the bundled corpus for name lookup",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("taut", parents=[common], help="classical tautology check")
    p.add_argument("formula", help="formula text or corpus schema name")
    p.set_defaults(fn=_cmd_taut)

    p = sub.add_parser(
        "theorem", parents=[common], help="validity over all admissible valuations"
    )
    p.add_argument("formula", help="formula text or corpus schema name")
    p.set_defaults(fn=_cmd_theorem)

    p = sub.add_parser(
        "nontrivial",
        parents=[common],
        help="triviality of a schema against a reference packaging",
    )
    p.add_argument("schema", help="schema name or formula text")
    p.add_argument(
        "--ref",
        default="A_t",
        help="reference schema name or formula (default A_t)",
    )
    p.set_defaults(fn=_cmd_nontrivial)

    p = sub.add_parser(
        "qnt", parents=[common], help="quasi-triviality comparison of two schemata"
    )
    p.add_argument("left", help="schema name or formula text")
    p.add_argument("right", help="schema name or formula text")
    p.set_defaults(fn=_cmd_qnt)

    p = sub.add_parser(
        "matrix",
        parents=[common],
        help="pairwise quasi-triviality matrix (default: the established five)",
    )
    p.add_argument(
        "--corpus",
        metavar="FILE",
        default=None,
        help="schema file whose entries form the matrix",
    )
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser(
        "characteristic",
        parents=[common],
        help="validity plus recovery of the three axiom schemata",
    )
    p.add_argument("schema", help="schema name or formula text")
    p.add_argument(
        "--max-pool",
        type=int,
        default=4,
        choices=(3, 4),
        help="largest recovery pool to try (default 4)",
    )
    p.set_defaults(fn=_cmd_characteristic)

    p = sub.add_parser(
        "check-proof", parents=[common], help="check a proof script file"
    )
    p.add_argument("file", help="path to a .proof script")
    p.set_defaults(fn=_cmd_check_proof)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="re-derive every established claim against the corpus",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser(
        "conjectures",
        parents=[common],
        help="full verdict sweep over the conjectured schemata",
    )
    p.set_defaults(fn=_cmd_conjectures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        corpus = (
            load_corpus(Path(args.corpus_file))
            if args.corpus_file is not None
            else load_corpus()
        )
        return args.fn(args, corpus)
    except (
        UsageError,
        ParseError,
        CriterionInapplicable,
        BudgetError,
        FileNotFoundError,
        KeyError,
        ValueError,
    ) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
