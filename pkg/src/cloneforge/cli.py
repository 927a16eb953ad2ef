"""Command-line front end.

Exit codes: 0 pass/true/minimal, 1 fail/false/not-minimal, 2 inconclusive or
no samples, 3 malformed input or usage error.  ``verify all`` exits nonzero
exactly when some check fails (an inconclusive verdict counts as failure in
aggregate runs).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import catalog, relations, terms, verifier
from .clones import (
    CloneCapExceeded,
    MinimalityKind,
    is_minimal_majority,
    majority_members,
    quick_nonminimality_witness,
    ternary_closure,
)
from .operations import (
    FormatError,
    Operation,
    TableError,
    find_isomorphism,
    is_boolean_minority,
    is_conservative,
    is_cyclically_commutative,
    is_idempotent,
    is_majority,
    is_near_unanimity,
    is_projection,
    is_semiprojection,
    parse_operation,
    serialize_majority,
    serialize_operation,
)
from .reports import FAIL, INCONCLUSIVE, NO_SAMPLES, PASS, Report, render_text_many, reports_to_json

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3

PREDICATES = {
    "projection": lambda f: is_projection(f) is not None,
    "idempotent": is_idempotent,
    "majority": is_majority,
    "near-unanimity": is_near_unanimity,
    "semiprojection": is_semiprojection,
    "cyclically-commutative": is_cyclically_commutative,
    "conservative": is_conservative,
    "boolean-minority": is_boolean_minority,
    "star": terms.satisfies_star,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT_ERROR)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cloneforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate an operation file, optionally testing a predicate")
    p.add_argument("file")
    p.add_argument("--predicate", choices=sorted(PREDICATES))

    p = sub.add_parser("table", help="print a built-in table in majority format")
    p.add_argument("name", choices=list(catalog.GENERATOR_NAMES))

    p = sub.add_parser("hat", help="star-idempotent member of the iterate sequence")
    p.add_argument("file")

    p = sub.add_parser("members", help="ternary fragment of the clone of an operation")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=verifier.DEFAULT_CAP)

    p = sub.add_parser("minimal", help="minimality verdict for a majority operation")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=verifier.DEFAULT_CAP)

    p = sub.add_parser("iso", help="find an isomorphism between two operations")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("superpose", help="evaluate a term over the operation in a file")
    p.add_argument("file")
    p.add_argument("term")

    p = sub.add_parser("relation-check", help="does the operation preserve the relation")
    p.add_argument("file")
    p.add_argument("relation")

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("checks", choices=list(verifier.VERIFY_CHECKS) + ["all"])
    p.add_argument("--cap", type=int, default=verifier.DEFAULT_CAP)
    p.add_argument("--samples", type=int, default=verifier.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=verifier.DEFAULT_SEED)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return parser


def _load_operation(path: str) -> Operation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", 1) from None
    return parse_operation(text)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    if args.predicate is None:
        print(f"operation arity={op.arity} size={op.size} ok")
        return EXIT_PASS
    result = PREDICATES[args.predicate](op)
    print(f"{args.predicate}: {'true' if result else 'false'}")
    return EXIT_PASS if result else EXIT_FAIL


def _cmd_table(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_majority(catalog.generator(args.name)))
    return EXIT_PASS


def _cmd_hat(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    result = terms.hat(op)
    print(f"# star exponent {terms.hat_exponent(op)}")
    sys.stdout.write(serialize_majority(result))
    return EXIT_PASS


def _cmd_members(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    frag = ternary_closure(op, args.cap)
    print(f"fragment size: {len(frag.members)}{'' if frag.closed else ' (cap exceeded, partial)'}")
    if not frag.closed:
        return EXIT_INCONCLUSIVE
    if is_majority(op):
        members = majority_members(op, args.cap)
        print(f"majority members: {len(members)}")
        for m in members:
            sys.stdout.write("\n" + serialize_majority(m))
    return EXIT_PASS


def _cmd_minimal(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    verdict = is_minimal_majority(op, args.cap)
    if verdict.kind is MinimalityKind.MINIMAL:
        print("minimal")
        return EXIT_PASS
    if verdict.kind is MinimalityKind.NOT_MINIMAL:
        assert verdict.witness is not None and verdict.reason is not None
        print(f"not minimal ({verdict.reason.value})")
        sys.stdout.write(serialize_operation(verdict.witness))
        return EXIT_FAIL
    print(f"inconclusive at cap {args.cap}")
    return EXIT_INCONCLUSIVE


def _cmd_iso(args: argparse.Namespace) -> int:
    f = _load_operation(args.file1)
    g = _load_operation(args.file2)
    phi = find_isomorphism(f, g)
    if phi is None:
        print("not isomorphic")
        return EXIT_FAIL
    print(" ".join(f"{a}->{b}" for a, b in enumerate(phi, start=1)))
    return EXIT_PASS


def _cmd_superpose(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    term = terms.parse_term(args.term)
    result = terms.eval_term(term, op)
    sys.stdout.write(serialize_operation(result))
    return EXIT_PASS


def _cmd_relation_check(args: argparse.Namespace) -> int:
    op = _load_operation(args.file)
    rho = relations.parse_relation(args.relation, op.size)
    ok = relations.preserves(op, rho)
    print("preserved" if ok else "not preserved")
    return EXIT_PASS if ok else EXIT_FAIL


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.threads < 1:
        raise TableError(f"--threads must be >= 1, got {args.threads}")
    if args.checks == "all":
        reports = verifier.verify_all(args.cap, args.samples, args.seed)
    else:
        reports = verifier.run_check(args.checks, args.cap, args.samples, args.seed)
    if args.format == "json":
        _emit(reports_to_json(reports), args.output)
    else:
        _emit(render_text_many(reports), args.output)
    statuses = {r.status for r in reports}
    if args.checks == "all":
        return EXIT_FAIL if (FAIL in statuses or INCONCLUSIVE in statuses) else EXIT_PASS
    if FAIL in statuses:
        return EXIT_FAIL
    if INCONCLUSIVE in statuses or NO_SAMPLES in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


_COMMANDS = {
    "check": _cmd_check,
    "table": _cmd_table,
    "hat": _cmd_hat,
    "members": _cmd_members,
    "minimal": _cmd_minimal,
    "iso": _cmd_iso,
    "superpose": _cmd_superpose,
    "relation-check": _cmd_relation_check,
    "verify": _cmd_verify,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (TableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CloneCapExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
