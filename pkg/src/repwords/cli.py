"""Command line front end: repwords generate|check|verify|search|report."""

from __future__ import annotations

import argparse
import json
import sys

from .words import WORD_NAMES, Word, named_stream, parse_word
from .repetition import (
    factor_occurrences,
    find_cubes,
    find_overlaps,
    find_squares,
    max_square_root,
)
from .verification import CHECKS, run_all
from .search import AvoidancePredicate, search

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_CAP_REACHED = 3

_GENERATE_CHUNK = 1 << 16
_CHECK_LIMIT = 10 ** 6


def _dumps(payload) -> str:
    # canonical form: sorted keys, no spaces, integers only; round-trips bytewise
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repwords",
        description="Generate morphic words, detect repetitions, verify the "
                    "finite case analyses, and search avoidance trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="print a prefix of a named word")
    p_gen.add_argument("name", choices=WORD_NAMES)
    p_gen.add_argument("length", type=_nonnegative, help="number of letters")
    p_gen.add_argument("--format", choices=("text", "json"), default="text")

    p_check = sub.add_parser("check", help="scan a word for repetitions")
    p_check.add_argument("word", nargs="?", help="the word as ASCII digits")
    p_check.add_argument("--file", help="read the word from a file")
    p_check.add_argument("--named", choices=WORD_NAMES,
                         help="check a generated prefix instead of input")
    p_check.add_argument("--length", type=_nonnegative,
                         help="prefix length for --named")
    p_check.add_argument("--min-square-root", type=int, metavar="R",
                         help="flag squares whose root has length at least R")
    p_check.add_argument("--cubes", action="store_true", help="flag cubes")
    p_check.add_argument("--overlaps", action="store_true", help="flag overlaps")
    p_check.add_argument("--factors", metavar="F1,F2,...",
                         help="flag occurrences of these comma-separated factors")
    p_check.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--only", choices=sorted(CHECKS), help="run one named check")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_search = sub.add_parser("search", help="traverse an avoidance tree")
    p_search.add_argument("--alphabet", type=int, default=2, help="alphabet size")
    p_search.add_argument("--squarefree", action="store_true",
                          help="forbid all squares")
    p_search.add_argument("--max-square-root", type=int, metavar="R",
                          help="tolerate squares with roots up to R, forbid longer")
    p_search.add_argument("--no-cubes", action="store_true", help="forbid cubes")
    p_search.add_argument("--no-overlaps", action="store_true", help="forbid overlaps")
    p_search.add_argument("--forbid-factor", action="append", default=[],
                          metavar="F", help="forbid a factor (repeatable)")
    p_search.add_argument("--fix-first", type=int, metavar="LETTER",
                          help="label the root with this letter")
    p_search.add_argument("--depth-cap", type=int, default=64)
    p_search.add_argument("--traversal", choices=("dfs", "bfs"), default="dfs")
    p_search.add_argument("--format", choices=("text", "json"), default="text")

    p_report = sub.add_parser("report", help="write CSV data and PNG figures")
    p_report.add_argument("--out-dir", required=True)
    p_report.add_argument("--kind", choices=("growth", "tree", "all"), default="all")
    p_report.add_argument("--lengths", metavar="L1,L2,...",
                          help="prefix lengths for the growth report")
    p_report.add_argument("--names", metavar="N1,N2,...",
                          help="named words for the growth report")
    return parser


def cmd_generate(args) -> int:
    stream = named_stream(args.name)
    if args.format == "json":
        word = stream.take(args.length)
        print(_dumps({"name": args.name, "length": args.length, "word": str(word)}))
        return EXIT_OK
    remaining = args.length
    while remaining > 0:
        chunk = stream.take(min(remaining, _GENERATE_CHUNK))
        sys.stdout.write(str(chunk))
        remaining -= len(chunk)
    if args.length > 0:
        sys.stdout.write("\n")
    return EXIT_OK


def _load_word(args) -> Word:
    sources = [args.word is not None, args.file is not None, args.named is not None]
    if sum(sources) > 1:
        raise ValueError("give the word as an argument, a file, or --named, not several")
    if args.named is not None:
        if args.length is None:
            raise ValueError("--named needs --length")
        return named_stream(args.named).take(args.length)
    if args.word is not None:
        text = args.word
    elif args.file is not None:
        with open(args.file) as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    word = parse_word(text)
    if len(word) > _CHECK_LIMIT:
        raise ValueError(f"checking is limited to {_CHECK_LIMIT} letters")
    return word


def cmd_check(args) -> int:
    try:
        word = _load_word(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    requested = any((args.min_square_root is not None, args.cubes,
                     args.overlaps, args.factors is not None))
    payload: dict = {"length": len(word)}
    violations = 0
    if args.min_square_root is not None or not requested:
        min_root = args.min_square_root if args.min_square_root is not None else 1
        squares = find_squares(word, min_root)
        payload["squares"] = [[occ.position, occ.root_length] for occ in squares]
        payload["max_square_root"] = max_square_root(word)
        violations += len(squares)
    if args.cubes or not requested:
        cubes = find_cubes(word)
        payload["cubes"] = [list(pair) for pair in cubes]
        violations += len(cubes)
    if args.overlaps or not requested:
        overlaps = find_overlaps(word)
        payload["overlaps"] = [list(pair) for pair in overlaps]
        violations += len(overlaps)
    if args.factors is not None:
        hits = []
        for text in args.factors.split(","):
            factor = parse_word(text)
            hits.extend([position, str(factor)] for position in factor_occurrences(word, factor))
        payload["factors"] = sorted(hits)
        violations += len(hits)
    payload["passed"] = violations == 0

    if args.format == "json":
        print(_dumps(payload))
    else:
        print(f"length {payload['length']}")
        for key in ("squares", "cubes", "overlaps", "factors"):
            if key in payload:
                shown = payload[key][:20]
                suffix = " ..." if len(payload[key]) > 20 else ""
                print(f"{key}: {len(payload[key])} {shown}{suffix}")
        if "max_square_root" in payload:
            print(f"max square root: {payload['max_square_root']}")
        print("PASS" if payload["passed"] else "FAIL")
    return EXIT_OK if payload["passed"] else EXIT_VIOLATIONS


def cmd_verify(args) -> int:
    reports = [CHECKS[args.only]()] if args.only else run_all()
    if args.format == "json":
        print(_dumps([report.to_dict() for report in reports]))
    else:
        for report in reports:
            counts = ""
            if report.expected_count is not None:
                counts = f" ({report.actual_count}/{report.expected_count})"
            print(f"{'PASS' if report.passed else 'FAIL'}  {report.check_name}{counts}")
            shown = report.witnesses if not report.passed else []
            for witness in shown[:10]:
                print(f"        {witness}")
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VIOLATIONS


def cmd_search(args) -> int:
    if args.squarefree and args.max_square_root is not None:
        print("error: --squarefree and --max-square-root conflict", file=sys.stderr)
        return EXIT_INPUT
    min_forbidden = None
    if args.squarefree:
        min_forbidden = 1
    elif args.max_square_root is not None:
        min_forbidden = args.max_square_root + 1
    try:
        predicate = AvoidancePredicate(
            alphabet_size=args.alphabet,
            min_forbidden_square_root=min_forbidden,
            forbid_cubes=args.no_cubes,
            forbid_overlaps=args.no_overlaps,
            forbidden_factors=tuple(parse_word(text) for text in args.forbid_factor),
        )
        report = search(predicate, fix_first_letter=args.fix_first,
                        depth_cap=args.depth_cap, traversal=args.traversal)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "json":
        print(_dumps(report.to_dict()))
    else:
        if report.finite:
            print(f"finite tree: {report.leaf_count} leaves, height {report.height}, "
                  f"{report.nodes_visited} nodes visited")
        else:
            print(f"depth cap {args.depth_cap} reached; counts are lower bounds "
                  f"({report.leaf_count} leaves seen, {report.nodes_visited} nodes)")
        print(f"deepest leaves: {[str(word) for word in report.deepest_words]}")
        print(f"longest avoiding: {[str(word) for word in report.maximal_avoiding]}")
    return EXIT_OK if report.finite else EXIT_CAP_REACHED


def cmd_report(args) -> int:
    from . import report as report_mod

    written = []
    try:
        if args.kind in ("growth", "all"):
            names = tuple(args.names.split(",")) if args.names else WORD_NAMES
            lengths = (tuple(int(t) for t in args.lengths.split(","))
                       if args.lengths else report_mod.DEFAULT_GROWTH_LENGTHS)
            written.extend(report_mod.write_square_growth(args.out_dir, names, lengths))
        if args.kind in ("tree", "all"):
            written.extend(report_mod.write_leaf_depths(args.out_dir))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for path in written:
        print(path)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "generate": cmd_generate,
        "check": cmd_check,
        "verify": cmd_verify,
        "search": cmd_search,
        "report": cmd_report,
    }[args.command]
    return handler(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
