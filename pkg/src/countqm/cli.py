"""Command-line surface: minimize, decide, evaluate, render, oracle, bench.

Exit codes: 0 yes/ok, 3 no, 2 usage or parse error, 4 precondition
violation (e.g. a non-antisymmetric input to `cohom`).
"""

from __future__ import annotations

import argparse
import os
import sys

from .bench import run_bench, write_csv
from .coeff import CoefficientError, RatCode, format_coeff
from .lists import (
    EncodedList,
    ListFormatError,
    parse_list,
    render_dot,
    serialize_list,
)
from .minimize import (
    PreconditionError,
    decide_cohomologous,
    decide_equivalent,
    find_minimal_list,
    is_antisymmetric,
)
from .oracle import OracleTooLargeError, oracle_equivalent, oracle_minimal_depth
from .words import WordError, parse_word
from .lists import build_difference, evaluate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO = 3
EXIT_PRECONDITION = 4


def _load(path: str) -> EncodedList:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ListFormatError(0, f"cannot read {path}: {exc}") from None
    return parse_list(text)


def _require_compatible(L1: EncodedList, L2: EncodedList) -> None:
    if L1.alphabet != L2.alphabet or L1.domain.name != L2.domain.name:
        raise PreconditionError("the two lists use different headers")


def _cmd_minimize(args) -> int:
    L = _load(args.infile)
    frames = []
    on_frame = frames.append if args.trace else None
    M = find_minimal_list(L, on_frame=on_frame)
    with open(args.outfile, "w", encoding="utf-8") as handle:
        handle.write(serialize_list(M))
    if args.trace:
        os.makedirs(args.trace, exist_ok=True)
        for i, frame in enumerate(frames):
            path = os.path.join(args.trace, f"frame_{i:04d}.dot")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(render_dot(frame))
    return EXIT_OK


def _cmd_equiv(args) -> int:
    L1, L2 = _load(args.file1), _load(args.file2)
    _require_compatible(L1, L2)
    verdict = decide_equivalent(L1, L2)
    print("yes" if verdict else "no")
    return EXIT_OK if verdict else EXIT_NO


def _cmd_cohom(args) -> int:
    L1, L2 = _load(args.file1), _load(args.file2)
    _require_compatible(L1, L2)
    if not L1.alphabet.is_group:
        raise PreconditionError("cohom needs group-mode lists")
    if not is_antisymmetric(L1) or not is_antisymmetric(L2):
        raise PreconditionError("cohom needs antisymmetric lists")
    verdict = decide_cohomologous(L1, L2)
    print("yes" if verdict else "no")
    return EXIT_OK if verdict else EXIT_NO


def _cmd_eval(args) -> int:
    L = _load(args.infile)
    word = parse_word(args.word, L.alphabet)
    value = evaluate(L, word)
    if L.domain.name == "rat":
        print(format_coeff(RatCode.from_value(value)))
    else:
        print(value)
    return EXIT_OK


def _cmd_render(args) -> int:
    L = _load(args.infile)
    text = render_dot(L)
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if args.kind == "equiv":
        if len(args.files) != 2:
            raise ListFormatError(0, "oracle equiv needs two files")
        L1, L2 = _load(args.files[0]), _load(args.files[1])
        _require_compatible(L1, L2)
        verdict = oracle_equivalent(L1, L2)
        print("yes" if verdict else "no")
        return EXIT_OK if verdict else EXIT_NO
    if len(args.files) != 1:
        raise ListFormatError(0, "oracle depth needs one file")
    print(oracle_minimal_depth(_load(args.files[0])))
    return EXIT_OK


def _cmd_bench(args) -> int:
    sizes = []
    for token in args.sizes.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            sizes.append(int(token))
        except ValueError:
            raise ListFormatError(0, f"bad size {token!r}") from None
    records = run_bench(args.mode, args.coeff, args.n, sizes, args.trials,
                        args.seed, shape=args.shape)
    write_csv(records, args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="countqm",
        description="Minimize and compare counting functions on free "
                    "monoids and free groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimize", help="write a minimal equivalent list")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--trace", metavar="DIR",
                   help="write one DOT frame per processing level")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("equiv", help="decide bounded distance")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("cohom", help="decide cohomology of quasimorphisms")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_cohom)

    p = sub.add_parser("eval", help="evaluate a list at a word")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("render", help="render the weighted tree as DOT")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("oracle", help="run the brute-force cross-check")
    p.add_argument("kind", choices=("equiv", "depth"))
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="time minimization over a size ladder")
    p.add_argument("--mode", choices=("monoid", "group"), default="monoid")
    p.add_argument("--coeff", choices=("int", "rat"), default="int")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--sizes", required=True,
                   help="comma-separated total sizes")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", required=True)
    p.add_argument("--shape", choices=("collapse", "random"),
                   default="collapse")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ListFormatError, CoefficientError, WordError,
            OracleTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
