"""``gacalc`` command line: eval, table, check and repl subcommands.

Exit status is 0 on success, 1 when an expression fails to lex, parse,
evaluate or pass a signature check, and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .errors import GAError, SizeGuardError, SourceError
from .evaluator import check_oracle, check_signature, evaluate
from .multivector import Multivector, format_multivector, grade_project
from .parser import parse
from .signature import Signature

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # report usage problems to the caller instead of exiting the process
    def error(self, message: str):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _signature_arg(text: str) -> Signature:
    try:
        return Signature.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="gacalc",
        description="Exact geometric algebra calculator over GA(inf, inf).",
        epilog="Expressions starting with '-' must follow '--', e.g. gacalc eval -- \"-e[0]\".",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_ArgumentParser)
    sub.required = True

    p_eval = sub.add_parser("eval", help="evaluate an expression and print its canonical form")
    p_eval.add_argument("--signature", type=_signature_arg, metavar="p,q",
                        help="require literals and result to lie in GA(p,q)")
    p_eval.add_argument("--check-oracle", action="store_true",
                        help="cross-check pure blade products with the word reducer")
    p_eval.add_argument("--grades", action="store_true",
                        help="print one line per non-zero grade")
    p_eval.add_argument("expression")

    p_table = sub.add_parser("table", help="print the Cayley table of GA(p,q)")
    p_table.add_argument("signature", type=_signature_arg, metavar="p,q")
    p_table.add_argument("--tsv", action="store_true",
                         help="one tab-separated line per cell: row, column, sign, result")

    p_repl = sub.add_parser("repl", help="read expressions from standard input")
    p_repl.add_argument("--signature", type=_signature_arg, metavar="p,q")

    p_check = sub.add_parser("check", help="exit 0 iff the value lies in GA(p,q)")
    p_check.add_argument("signature", type=_signature_arg, metavar="p,q")
    p_check.add_argument("expression")
    return parser


def _report(err: TextIO, source: str, exc: GAError) -> None:
    print(f"error: {exc}", file=err)
    if isinstance(exc, SourceError):
        raw = source.encode("utf-8")
        column = len(raw[: exc.offset].decode("utf-8", errors="ignore"))
        print(f"  {source}", file=err)
        print("  " + " " * column + "^", file=err)


def _evaluate_line(text: str, sig: Optional[Signature], ans: Optional[Multivector] = None,
                   oracle: bool = False, err: Optional[TextIO] = None) -> Multivector:
    node = parse(text)
    value = evaluate(node, ans)
    if sig is not None:
        check_signature(node, value, sig)
    if oracle and not check_oracle(node, value) and err is not None:
        print("note: not a pure blade product; oracle check skipped", file=err)
    return value


def _cmd_eval(args, out: TextIO, err: TextIO) -> int:
    try:
        value = _evaluate_line(args.expression, args.signature, oracle=args.check_oracle, err=err)
    except GAError as exc:
        _report(err, args.expression, exc)
        return EXIT_ERROR
    if args.grades and value:
        for k in value.grades():
            print(f"{k}: {format_multivector(grade_project(value, k))}", file=out)
    else:
        print(format_multivector(value), file=out)
    return EXIT_OK


def _cmd_check(args, out: TextIO, err: TextIO) -> int:
    sig: Signature = args.signature
    try:
        value = _evaluate_line(args.expression, None)
    except GAError as exc:
        _report(err, args.expression, exc)
        return EXIT_ERROR
    text = format_multivector(value)
    try:
        sig.require(value)
    except GAError as exc:
        print(f"{text} is not in {sig}", file=out)
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    print(f"{text} is in {sig}", file=out)
    return EXIT_OK


def format_table(sig: Signature, tsv: bool = False) -> str:
    """Render the Cayley table of *sig* as aligned text or TSV lines."""
    basis = sig.basis()
    table = sig.cayley_table()
    if tsv:
        lines = []
        for r, row in zip(basis, table):
            for c, cell in zip(basis, row):
                lines.append(f"{r}\t{c}\t{'+1' if cell.sign > 0 else '-1'}\t{cell.blade}")
        return "\n".join(lines) + "\n"
    grid = [[""] + [str(b) for b in basis]]
    grid += [[str(r)] + [str(cell) for cell in row] for r, row in zip(basis, table)]
    widths = [max(len(row[k]) for row in grid) for k in range(len(grid[0]))]
    lines = []
    for n, row in enumerate(grid):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _cmd_table(args, out: TextIO, err: TextIO) -> int:
    try:
        text = format_table(args.signature, args.tsv)
    except SizeGuardError as exc:
        print(f"gacalc table: error: {exc}", file=err)
        return EXIT_USAGE
    out.write(text)
    return EXIT_OK


def repl(sig: Optional[Signature], inp: TextIO, out: TextIO, err: TextIO,
         prompt: str = "") -> int:
    """Evaluate one expression per line; ``ans`` holds the last value."""
    ans: Optional[Multivector] = None
    while True:
        if prompt:
            out.write(prompt)
            out.flush()
        line = inp.readline()
        if not line:
            if prompt:
                out.write("\n")
            return EXIT_OK
        text = line.strip()
        if not text:
            continue
        if text in ("quit", "exit"):
            return EXIT_OK
        try:
            ans = _evaluate_line(text, sig, ans)
        except GAError as exc:
            _report(err, text, exc)
            continue
        print(format_multivector(ans), file=out)
        out.flush()


def _cmd_repl(args, out: TextIO, err: TextIO, inp: TextIO) -> int:
    interactive = inp.isatty()
    if interactive:
        try:
            import readline  # noqa: F401  line editing only
        except ImportError:
            pass
    return repl(args.signature, inp, out, err, prompt="gacalc> " if interactive else "")


def run_cli(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
            stderr: Optional[TextIO] = None, stdin: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    inp = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    if args.command == "eval":
        return _cmd_eval(args, out, err)
    if args.command == "check":
        return _cmd_check(args, out, err)
    if args.command == "table":
        return _cmd_table(args, out, err)
    return _cmd_repl(args, out, err, inp)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
