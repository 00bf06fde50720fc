"""Command-line parser producing command requests and global run options."""

import argparse
from typing import NoReturn, Optional, Sequence

from analysis.scans import SCAN_MODES
from cli.constants import CHECKS, COROLLARIES, DESCRIPTION, EPILOG, FORMATS, KINDS, PROG
from cli.models import AnalyzeCommand, CheckCommand, CommandRequest, FactorizeCommand, RunOptions, ScanCommand
from common.constants import DEFAULT_CORPUS_MAX_ORDER, DEFAULT_CORPUS_MAX_WORDS, DEFAULT_CORPUS_SIZE, DEFAULT_LETTER


class ParseError(Exception):
    """Raised when command parsing fails."""

    pass


class _RaisingParser(argparse.ArgumentParser):
    """ArgumentParser that raises ParseError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise ParseError(message)


def _global_flags() -> argparse.ArgumentParser:
    flags = _RaisingParser(add_help=False)
    flags.add_argument("--n-bound", type=int, dest="n_bound", help="largest n accepted by enumerations")
    flags.add_argument("--budget", type=int, help="search budget (nodes or candidates)")
    flags.add_argument("--seed", type=int, help="seed for generated corpora")
    flags.add_argument("--format", choices=FORMATS, dest="output_format", help="output format")
    flags.add_argument("--out", dest="out_path", metavar="PATH", help="write the output to PATH")
    flags.add_argument("--config", dest="config_path", metavar="PATH", help="configuration file")
    flags.add_argument("--debug", action="store_true", help="debug logging")
    return flags


def build_parser() -> argparse.ArgumentParser:
    """Build the argparse tree; global flags follow the sub-command."""
    flags = _global_flags()
    parser = _RaisingParser(
        prog=PROG,
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", parser_class=_RaisingParser)

    factorize = sub.add_parser("factorize", parents=[flags], help="enumerate factorizations of Z_n")
    factorize.add_argument("n", type=int)
    factorize.add_argument("--kind", choices=KINDS, default="all")

    check = sub.add_parser("check", parents=[flags], help="code predicates of a code file")
    check.add_argument("path")
    for name in CHECKS:
        check.add_argument(f"--{name}", action="append_const", const=name, dest="checks")
    check.add_argument("--all", action="store_true", dest="all_checks", help="every check (default)")

    analyze = sub.add_parser("analyze", parents=[flags], help="left/right-set analysis of a maximal code")
    analyze.add_argument("path")
    analyze.add_argument("--letter", default=DEFAULT_LETTER)
    analyze.add_argument("--corollary", choices=COROLLARIES, help="also replay a corollary")

    scan = sub.add_parser("scan", parents=[flags], help="evidence scan over a generated corpus")
    scan.add_argument("--mode", choices=SCAN_MODES, required=True)
    scan.add_argument("--corpus-size", type=int, dest="corpus_size", default=DEFAULT_CORPUS_SIZE)
    scan.add_argument("--max-order", type=int, dest="max_order", default=DEFAULT_CORPUS_MAX_ORDER)
    scan.add_argument("--max-words", type=int, dest="max_words", default=DEFAULT_CORPUS_MAX_WORDS)
    scan.add_argument("--letter", default=DEFAULT_LETTER)
    return parser


def parse_command(argv: Optional[Sequence[str]]) -> tuple[CommandRequest, RunOptions]:
    """Parse command-line arguments into a command request and run options.

    Args:
        argv: Arguments without the program name

    Returns:
        (command, options)

    Raises:
        ParseError: If command syntax is invalid
    """
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise ParseError("a command is required: one of factorize, check, analyze, scan")

    options = RunOptions(
        n_bound=args.n_bound,
        budget=args.budget,
        seed=args.seed,
        output_format=args.output_format,
        out_path=args.out_path,
        config_path=args.config_path,
        debug=args.debug,
    )

    if args.command == "factorize":
        return FactorizeCommand(n=args.n, kind=args.kind), options
    if args.command == "check":
        checks = CHECKS if args.all_checks or not args.checks else tuple(c for c in CHECKS if c in args.checks)
        return CheckCommand(path=args.path, checks=checks), options
    if args.command == "analyze":
        if len(args.letter) != 1:
            raise ParseError(f"--letter takes a single letter, got {args.letter!r}")
        return AnalyzeCommand(path=args.path, letter=args.letter, corollary=args.corollary), options
    if args.corpus_size < 0 or args.max_order < 1 or args.max_words < 1:
        raise ParseError("--corpus-size must be >= 0, --max-order and --max-words >= 1")
    if len(args.letter) != 1:
        raise ParseError(f"--letter takes a single letter, got {args.letter!r}")
    return (
        ScanCommand(
            mode=args.mode,
            corpus_size=args.corpus_size,
            max_order=args.max_order,
            max_words=args.max_words,
            letter=args.letter,
        ),
        options,
    )
