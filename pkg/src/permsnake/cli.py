"""Command-line interface.

Commands: construct, verify, sizes, figures, search, import-ksnake.
Exit codes are a stable contract: 0 success/valid, 1 invalid code or
mismatch, 2 parse, I/O or precondition errors.
"""
from __future__ import annotations

import argparse
import math
import os
import sys

from . import figures as figmod
from .blocks import ksnake_block, rmgc_block
from .constructions import (
    GrayCode,
    METRIC_KENDALL,
    METRIC_LINF,
    ksnake_snake_start,
    rmgc_snake_start,
    size_table,
    snake_from_ksnake,
    snake_from_rmgc,
)
from .documents import (
    CodeDocument,
    KIND_KSNAKE,
    KIND_RMGC,
    KIND_SNAKE,
    detect_kind,
    format_document,
    format_rmgc_document,
    parse_document,
    parse_rmgc_document,
)
from .errors import ParseError, VerificationError
from .ksnake import (
    KendallSnake,
    embedded_a5_snake,
    format_ksnake,
    load_ksnake,
    parse_ksnake_fields,
    search_ksnake,
)
from .perm import apply_sequence, format_perm, identity
from .rmgc import build_rmgc
from .verify import exhaustive_max_snake, verify_code

ABSENT = "—"  # table placeholder for sizes without a construction


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _info(msg: str, to_stderr: bool) -> None:
    print(msg, file=sys.stderr if to_stderr else sys.stdout)


def _sizes_row(n: int) -> str:
    t = size_table(n)
    cells = [
        str(t.n),
        str(t.m0),
        ABSENT if t.m1 is None else str(t.m1),
        ABSENT if t.m2 is None else str(t.m2),
        str(t.bound),
    ]
    return ",".join(cells)


def _load_snake_source(args: argparse.Namespace) -> KendallSnake:
    if args.embedded and args.ksnake:
        raise ValueError("pass either --embedded or --ksnake, not both")
    if args.embedded:
        return embedded_a5_snake()
    if args.ksnake:
        return load_ksnake(args.ksnake)
    raise ValueError("this method needs --embedded or --ksnake <file>")


def _cmd_construct(args: argparse.Namespace) -> int:
    n = args.n
    info_to_stderr = args.out is None

    if args.method == "rmgc":
        r = build_rmgc(n)
        ok = True
        if n <= 8:
            chain = apply_sequence(identity(n), r.seq)
            ok = chain[-1] == chain[0] and len(set(chain[:-1])) == math.factorial(n)
        if not ok:
            _info("refusing to emit: sequence is not complete and cyclic", True)
            return 1
        _info(f"size={len(r.seq)} complete cyclic {n}-RMGC", info_to_stderr)
        _write_out(format_rmgc_document(r), args.out)
        return 0

    if args.method == "thm1":
        code = snake_from_rmgc(n)
    elif args.method == "thm2":
        code = snake_from_ksnake(n, _load_snake_source(args))
    elif args.method == "lemma3":
        block = rmgc_block(rmgc_snake_start(n), args.variant)
        code = GrayCode(n, block.start, block.transitions, False, METRIC_LINF)
    elif args.method == "lemma7":
        snake = _load_snake_source(args)
        block = ksnake_block(ksnake_snake_start(n), snake.transitions)
        code = GrayCode(n, block.start, block.transitions, False, METRIC_LINF)
    else:  # pragma: no cover - argparse constrains the choices
        raise AssertionError(args.method)

    report = verify_code(code, args.mode)
    if not report.valid:
        _info(report.render(), True)
        _info("refusing to emit an invalid code", True)
        return 1
    _info(f"size={code.size}", info_to_stderr)
    if n >= 4:
        _info(f"sizes row (n,m0,m1,m2,bound): {_sizes_row(n)}", info_to_stderr)
    _info(report.summary_line(), info_to_stderr)
    _write_out(
        format_document(CodeDocument(code, args.method), args.codewords), args.out
    )
    return 0


def _verify_snake_text(text: str, mode: str | None) -> int:
    doc = parse_document(text)
    report = verify_code(doc.code, mode)
    print(report.render())
    print(report.summary_line())
    return 0 if report.valid else 1


def _verify_ksnake_text(text: str, mode: str | None) -> int:
    n, start, transitions = parse_ksnake_fields(text)
    code = GrayCode(n, start, transitions, True, METRIC_KENDALL)
    report = verify_code(code, mode)
    print(report.render())
    print(report.summary_line())
    return 0 if report.valid else 1


def _verify_rmgc_text(text: str) -> int:
    r = parse_rmgc_document(text)
    chain = apply_sequence(identity(r.n), r.seq)
    complete = len(set(chain[:-1])) == math.factorial(r.n)
    cyclic = chain[-1] == chain[0]
    ok = complete and cyclic
    print(
        f"valid={str(ok).lower()} size={len(r.seq)} complete={str(complete).lower()} "
        f"cyclic={str(cyclic).lower()} n={r.n}"
    )
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    kind = detect_kind(text)
    if kind == KIND_SNAKE:
        return _verify_snake_text(text, args.mode)
    if kind == KIND_KSNAKE:
        return _verify_ksnake_text(text, args.mode)
    if kind == KIND_RMGC:
        return _verify_rmgc_text(text)
    raise ParseError(f"unrecognised document kind {kind!r}")


def _cmd_sizes(args: argparse.Namespace) -> int:
    lo, hi = args.lo, args.hi if args.hi is not None else args.lo
    if hi < lo:
        raise ValueError(f"empty range {lo}..{hi}")
    if args.csv:
        for n in range(lo, hi + 1):
            print(_sizes_row(n))
        return 0
    print(f"{'n':>3} {'m0':>12} {'m1':>12} {'m2':>14} {'bound':>14}")
    for n in range(lo, hi + 1):
        t = size_table(n)
        m1 = ABSENT if t.m1 is None else t.m1
        m2 = ABSENT if t.m2 is None else t.m2
        print(f"{t.n:>3} {t.m0:>12} {m1:>12} {m2:>14} {t.bound:>14}")
    return 0


def _cmd_figures(args: argparse.Namespace) -> int:
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        for name in figmod.FIGURE_NAMES:
            with open(
                os.path.join(args.out, f"{name}.txt"), "w", encoding="utf-8"
            ) as fh:
                fh.write(figmod.generate_figure(name))
    problems = figmod.compare_to_goldens()
    for name in figmod.FIGURE_NAMES:
        status = next((p for p in problems if p.startswith(name)), None)
        print(status if status is not None else f"{name}: ok")
    return 1 if problems else 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.what == "max":
        metric = args.metric
        best, witness = exhaustive_max_snake(
            args.n, metric, cyclic=not args.noncyclic, node_budget=args.budget
        )
        print(f"max_size={best}")
        if witness is not None:
            report = verify_code(witness)
            print(report.summary_line())
            if args.out:
                _write_out(
                    format_document(CodeDocument(witness, "search-max"), False),
                    args.out,
                )
        return 0
    # what == "ksnake"
    stats: dict = {}
    snake = search_ksnake(args.n, args.target, budget=args.budget, stats=stats)
    if snake is None:
        print(
            f"not-found target={args.target} nodes={stats['nodes']} "
            f"exhausted={str(stats['exhausted']).lower()}"
        )
        return 0
    print(f"found size={snake.size} nodes={stats['nodes']}")
    if args.out:
        _write_out(format_ksnake(snake), args.out)
    return 0


def _cmd_import_ksnake(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    n, start, transitions = parse_ksnake_fields(text)
    snake = KendallSnake.build(n, start, transitions)
    code = GrayCode(n, start, transitions, True, METRIC_KENDALL)
    print(verify_code(code).summary_line())
    print(f"start={format_perm(snake.start)} last_transition=t{transitions[-1]}")
    if args.out:
        _write_out(format_ksnake(snake), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permsnake",
        description=(
            "Construct, verify and search snake-in-the-box codes over "
            "permutations driven by push-to-the-top moves."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write it as a document")
    c.add_argument(
        "method",
        choices=["thm1", "thm2", "rmgc", "lemma3", "lemma7"],
        help=(
            "thm1: cyclic Chebyshev snake from complete RMGCs; "
            "thm2: cyclic Chebyshev snake from a Kendall snake; "
            "rmgc: complete cyclic Gray code; "
            "lemma3/lemma7: the two noncyclic building blocks"
        ),
    )
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--variant", type=int, choices=[1, 2], default=1)
    c.add_argument("--ksnake", metavar="PATH", help="Kendall snake file to consume")
    c.add_argument("--embedded", action="store_true", help="use the built-in (5,57) snake")
    c.add_argument("--mode", choices=["exhaustive", "sampled"], default=None)
    c.add_argument("--codewords", action="store_true", help="append the codeword listing")
    c.add_argument("--out", metavar="PATH")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="verify a snake, ksnake or rmgc document")
    v.add_argument("file")
    v.add_argument("--mode", choices=["exhaustive", "sampled"], default=None)
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sizes", help="construction sizes and the packing bound")
    s.add_argument("lo", type=int)
    s.add_argument("hi", type=int, nargs="?")
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=_cmd_sizes)

    f = sub.add_parser("figures", help="regenerate golden fixtures and diff them")
    f.add_argument("--out", metavar="DIR", help="also write the fixtures here")
    f.set_defaults(func=_cmd_figures)

    se = sub.add_parser("search", help="exhaustive oracle and Kendall-snake search")
    se.add_argument("what", choices=["max", "ksnake"])
    se.add_argument("--n", type=int, required=True)
    se.add_argument("--metric", choices=[METRIC_LINF, METRIC_KENDALL], default=METRIC_LINF)
    se.add_argument("--noncyclic", action="store_true")
    se.add_argument("--target", type=int, default=2)
    se.add_argument("--budget", type=int, default=1_000_000)
    se.add_argument("--out", metavar="PATH")
    se.set_defaults(func=_cmd_search)

    i = sub.add_parser("import-ksnake", help="parse and fully verify a ksnake file")
    i.add_argument("file")
    i.add_argument("--out", metavar="PATH", help="write the normalised form here")
    i.set_defaults(func=_cmd_import_ksnake)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
