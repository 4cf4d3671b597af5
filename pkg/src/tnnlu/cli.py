"""Batch command-line front end.

Commands: decompose, detect, check-tnn, identities-selftest, generate.
Matrices are read from a file, stdin ("-"), or an --inline string with
";"-separated rows.  Output is plain text or a structured JSON document;
either way all rationals are emitted exactly as "p" or "p/q" and identical
invocations produce byte-identical output.

Exit codes: 0 success, 2 usage, 3 parse error, 4 class not found,
5 not totally nonnegative, 6 size guard, 7 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .core import Mat, format_matrix, format_scalar, parse_matrix
from .errors import (
    MovePreconditionError,
    NotInClassError,
    NotTotallyNonnegativeError,
    ParseError,
    ReplayError,
    SizeGuardError,
)
from .identities import selftest
from .mclass import ClassDesc, detect_class, greedy_leaders
from .explicit import explicit_decompose, reconstruct_lu
from .neville import format_trace, neville_decompose
from .tnn import is_tnn, random_tnn

_EXIT_CODES = (
    (ParseError, "parse-error", 3),
    (NotInClassError, "class-not-found", 4),
    (NotTotallyNonnegativeError, "not-tnn", 5),
    (SizeGuardError, "size-guard", 6),
    (MovePreconditionError, "bad-input", 7),
    (ReplayError, "bad-input", 7),
    (IndexError, "bad-input", 7),
    (ValueError, "bad-input", 7),
)


def _matrix_rows(A: Mat) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in A.iter_rows()]


def _class_payload(desc: Optional[ClassDesc]):
    if desc is None:
        return None
    return {"r": list(desc.r), "c": list(desc.c)}


def _class_text(desc: Optional[ClassDesc]) -> str:
    if desc is None:
        return "none"
    r = ",".join(str(i) for i in desc.r)
    c = ",".join(str(j) for j in desc.c)
    return f"r = {{{r}}}, c = {{{c}}}"


def _read_matrix(args: argparse.Namespace) -> Mat:
    if getattr(args, "inline", None) is not None:
        rows = [chunk.strip() for chunk in args.inline.split(";") if chunk.strip()]
        if not rows:
            raise ParseError("empty inline matrix")
        width = len(rows[0].split())
        text = f"{len(rows)} {width}\n" + "\n".join(rows) + "\n"
        return parse_matrix(text)
    if args.input == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            return parse_matrix(handle.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc


def _cmd_decompose(args: argparse.Namespace) -> dict:
    A = _read_matrix(args)
    trace_text: Optional[str] = None
    if args.method == "neville":
        pair, trace = neville_decompose(
            A, check_tnn=not args.unchecked, max_size=args.max_bruteforce
        )
    else:
        if args.unchecked:
            desc = greedy_leaders(A)
        else:
            desc = detect_class(A, max_size=args.max_bruteforce)
        if desc is None:
            raise NotInClassError("matrix belongs to no class")
        decompose = reconstruct_lu if args.method == "reconstruct" else explicit_decompose
        pair = decompose(A, desc, check=False)
        trace = None
        if args.method == "auto":
            report = is_tnn(A, max_size=args.max_bruteforce)
            if report.is_tnn:
                nev_pair, trace = neville_decompose(A, check_tnn=False)
                if nev_pair.L != pair.L or nev_pair.U != pair.U:
                    raise RuntimeError("cross-check mismatch between methods")
    if args.trace and trace is not None:
        trace_text = format_trace(trace)
    payload = {
        "command": "decompose",
        "method": args.method,
        "class": _class_payload(pair.desc),
        "L": _matrix_rows(pair.L),
        "U": _matrix_rows(pair.U),
    }
    if args.trace:
        payload["trace"] = trace_text.splitlines() if trace_text else None
    lines = [
        f"method: {args.method}",
        f"class: {_class_text(pair.desc)}",
        "L:",
        format_matrix(pair.L).rstrip("\n"),
        "U:",
        format_matrix(pair.U).rstrip("\n"),
    ]
    if args.trace:
        lines.append("trace:")
        lines.append(trace_text.rstrip("\n") if trace_text else "unavailable")
    payload["_text"] = "\n".join(lines) + "\n"
    return payload


def _cmd_detect(args: argparse.Namespace) -> dict:
    A = _read_matrix(args)
    desc = detect_class(A, max_size=args.max_bruteforce)
    return {
        "command": "detect",
        "class": _class_payload(desc),
        "_text": f"class: {_class_text(desc)}\n",
    }


def _cmd_check_tnn(args: argparse.Namespace) -> dict:
    A = _read_matrix(args)
    report = is_tnn(A, max_size=args.max_bruteforce)
    if report.witness is None:
        witness = None
        witness_text = "witness: none"
    else:
        rows, cols, value = report.witness
        witness = {
            "rows": list(rows),
            "cols": list(cols),
            "minor": format_scalar(value),
        }
        rtxt = ",".join(str(i) for i in rows)
        ctxt = ",".join(str(j) for j in cols)
        witness_text = f"witness: [{{{rtxt}}}|{{{ctxt}}}] = {format_scalar(value)}"
    return {
        "command": "check-tnn",
        "is_tnn": report.is_tnn,
        "witness": witness,
        "_text": f"is_tnn: {'true' if report.is_tnn else 'false'}\n{witness_text}\n",
    }


def _cmd_generate(args: argparse.Namespace) -> dict:
    m, n = args.size
    if m < 0 or n < 0 or args.factors < 0:
        raise ValueError("size and factors must be nonnegative")
    A = random_tnn(m, n, seed=args.seed, factors=args.factors)
    return {
        "command": "generate",
        "rows": m,
        "cols": n,
        "seed": args.seed,
        "factors": args.factors,
        "matrix": _matrix_rows(A),
        "_text": format_matrix(A),
    }


def _cmd_selftest(args: argparse.Namespace) -> dict:
    results = selftest(seed=args.seed, instances=args.instances)
    failures = sum(entry["failures"] for entry in results.values())
    lines = [
        f"{name}: {entry['instances']} instances, {entry['failures']} failures"
        for name, entry in results.items()
    ]
    lines.append("ok" if failures == 0 else f"FAILED: {failures} failures")
    return {
        "command": "identities-selftest",
        "seed": args.seed,
        "instances": args.instances,
        "results": results,
        "ok": failures == 0,
        "_exit": 0 if failures == 0 else 1,
        "_text": "\n".join(lines) + "\n",
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tnnlu",
        description="Exact LU decomposition of totally nonnegative matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument(
            "--format",
            choices=("text", "structured"),
            default="text",
            help="output format (structured = JSON)",
        )
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="matrix file, or - for stdin")
            p.add_argument("--inline", help='inline matrix, rows separated by ";"')
            p.add_argument(
                "--max-bruteforce",
                type=int,
                default=8,
                metavar="N",
                help="size guard for exhaustive minor enumeration (default 8)",
            )

    p = sub.add_parser("decompose", help="factor a matrix as L*U with its class")
    add_common(p)
    p.add_argument(
        "--method",
        choices=("auto", "explicit", "neville", "reconstruct"),
        default="auto",
        help="auto = detect class, decompose explicitly, cross-check by elimination when TNN",
    )
    p.add_argument("--trace", action="store_true", help="include the elimination move list")
    p.add_argument(
        "--unchecked",
        action="store_true",
        help="skip class/TNN precondition checks; hard errors may surface instead",
    )
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("detect", help="report the unique class of a matrix, or none")
    add_common(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("check-tnn", help="brute-force total nonnegativity test")
    add_common(p)
    p.set_defaults(func=_cmd_check_tnn)

    p = sub.add_parser("generate", help="emit a seeded random totally nonnegative matrix")
    add_common(p, with_input=False)
    p.add_argument("--size", type=int, nargs=2, metavar=("M", "N"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--factors", type=int, default=12)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("identities-selftest", help="run the determinantal identity suites")
    add_common(p, with_input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=100)
    p.set_defaults(func=_cmd_selftest)

    return parser


def emit_structured(payload: dict) -> str:
    """Deterministic JSON rendering of a result payload."""
    visible = {k: v for k, v in payload.items() if not k.startswith("_")}
    return json.dumps(visible, indent=2) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except tuple(exc for exc, _, _ in _EXIT_CODES) as exc:
        for exc_type, category, code in _EXIT_CODES:
            if isinstance(exc, exc_type):
                print(f"error: {category}: {exc}", file=sys.stderr)
                return code
        raise  # unreachable
    if args.format == "structured":
        sys.stdout.write(emit_structured(payload))
    else:
        sys.stdout.write(payload["_text"])
    return int(payload.get("_exit", 0))


if __name__ == "__main__":
    sys.exit(main())
