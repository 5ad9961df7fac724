"""Command-line surface.

Commands::

    evenpairs analyze INPUT           precondition report (exit 1 on failure)
    evenpairs even-pair INPUT         structured even-pair search
    evenpairs contract-color INPUT    contraction sequence and coloring
    evenpairs decompose INPUT         2-join split and blocks
    evenpairs classify INPUT          basic-class certificate
    evenpairs verify --nmax N --scope graphs|trigraphs_in_F

INPUT is a file path or an inline literal, in graph6 or the trigraph text
format (sniffed, or forced with --format).  All commands print one JSON
document with sorted keys; --emit-cert writes the involved witnesses as
JSON lines.  Exit codes: 0 success, 1 precondition failure, 2 input error,
3 internal contradiction of a proved statement.

Worker count for ``verify`` comes from the EVENPAIRS_WORKERS variable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certs
from .basic import classify_basic
from .contraction import derive_coloring, run_contraction_sequence
from .decomposition import build_block, find_2join, find_complement_2join
from .engine import check_preconditions, find_even_pair_structured, verify_main_theorem
from .errors import InputError, NonBergeError, TheoremContradictionError
from .formats import load
from .trigraph import Trigraph

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2
EXIT_CONTRADICTION = 3


def _emit(document: dict, cert_objects: list, cert_path: str | None) -> None:
    print(json.dumps(certs.to_jsonable(document), sort_keys=True, indent=2))
    if cert_path:
        with open(cert_path, "w", encoding="ascii") as fh:
            for obj in cert_objects:
                if obj is not None:
                    fh.write(json.dumps(certs.to_jsonable(obj), sort_keys=True) + "\n")


def _load_input(args) -> Trigraph:
    return load(args.input, args.format)


def _cmd_analyze(args) -> int:
    T = _load_input(args)
    report = check_preconditions(T)
    witnesses = [c.witness for c in report.checks if not c.passed]
    _emit({"command": "analyze", "report": report}, witnesses, args.emit_cert)
    return EXIT_OK if report.ok else EXIT_PRECONDITION


def _cmd_even_pair(args) -> int:
    T = _load_input(args)
    result = find_even_pair_structured(T)
    if result.outcome == "even_pair" and args.need_disjoint:
        from .trigraph import switchable_components

        blocked = set()
        for comp in switchable_components(T):
            blocked |= comp
        if blocked & set(result.pair):
            _emit({"command": "even-pair", "result": result,
                   "error": "no even pair disjoint from the switchable component"},
                  [], args.emit_cert)
            return EXIT_PRECONDITION
    _emit({"command": "even-pair", "result": result}, [result], args.emit_cert)
    return EXIT_OK if result.outcome != "precondition_failed" else EXIT_PRECONDITION


def _cmd_contract_color(args) -> int:
    T = _load_input(args)
    if not T.is_graph:
        raise InputError("contract-color expects a graph input")
    seq = run_contraction_sequence(T, "exhaustive_search_for_complete")
    coloring = derive_coloring(seq) if seq.outcome == "complete" else None
    _emit({"command": "contract-color", "sequence": seq, "coloring": coloring},
          [seq, coloring], args.emit_cert)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    T = _load_input(args)
    split = find_2join(T)
    blocks = None
    if split is not None and split.proper and split.parity is not None:
        blocks = [build_block(T, split, 1), build_block(T, split, 2)]
    co_split = find_complement_2join(T)
    _emit({"command": "decompose", "two_join": split, "blocks": blocks,
           "complement_two_join": co_split},
          [split, co_split] + (blocks or []), args.emit_cert)
    return EXIT_OK


def _cmd_classify(args) -> int:
    T = _load_input(args)
    classification = classify_basic(T)
    _emit({"command": "classify", "classification": classification},
          [classification], args.emit_cert)
    return EXIT_OK


def _cmd_verify(args) -> int:
    summary = verify_main_theorem(args.nmax, args.scope, sample=args.sample,
                                  seed=args.seed, log_path=args.emit_cert)
    _emit({"command": "verify", "summary": summary}, [], None)
    return EXIT_OK if summary.ok else EXIT_CONTRADICTION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenpairs",
        description="Even pairs and decompositions of Berge graphs, "
                    "with checkable certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="file path or inline graph6/trigraph literal")
        p.add_argument("--format", choices=["graph6", "trigraph"], default=None)
        p.add_argument("--emit-cert", metavar="PATH", default=None,
                       help="write witness certificates as JSON lines")

    p = sub.add_parser("analyze", help="run the precondition checks")
    add_input(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("even-pair", help="structured even-pair search")
    add_input(p)
    p.add_argument("--need-disjoint", action="store_true",
                   help="fail unless the pair avoids the switchable component")
    p.set_defaults(func=_cmd_even_pair)

    p = sub.add_parser("contract-color", help="contraction sequence and coloring")
    add_input(p)
    p.set_defaults(func=_cmd_contract_color)

    p = sub.add_parser("decompose", help="2-join split and blocks")
    add_input(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("classify", help="basic-class recognition")
    add_input(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="exhaustive theorem harness")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--scope", choices=["graphs", "trigraphs_in_F"],
                   default="graphs")
    p.add_argument("--sample", type=int, default=None,
                   help="sample this many isomorphism classes at n = nmax")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit-cert", metavar="PATH", default=None,
                   help="write the per-instance JSON-lines log")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonBergeError as exc:
        print(json.dumps({"precondition_failure": str(exc)}), file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, FileNotFoundError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except TheoremContradictionError as exc:
        print(json.dumps({"theorem_contradiction": str(exc)}), file=sys.stderr)
        return EXIT_CONTRADICTION


if __name__ == "__main__":
    sys.exit(main())
