"""Command-line front end.

Every numeric argument is parsed exactly and every result is printed as a
reduced fraction (integers without the /1), so output is byte-deterministic.
Exit codes: 0 success, 1 verification failure, 2 parse or validation error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .dedekind import dedekind_sum
from .lens import ChainPresentation, LensSpace, chain_to_lens, lens_lambda
from .linalg import format_rational, parse_rational
from .links import parse_link, subset_label
from .moves import lambda_delta, mirror_lambda, parse_path, path_delta, tn_path
from .surgery import h1_order, lescop_lambda, walker_lambda
from .verify import run_verification


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let negative fractions like -3/1 pass as positional values.
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_link(args, warn_defaults: bool):
    link = parse_link(_read(args.file))
    if link.n > 10:
        print(
            f"warning: {link.n} components; the subset sum grows as 3^n and may be slow",
            file=sys.stderr,
        )
    if warn_defaults:
        defaulted = link.defaulted_a1()
        if defaulted:
            listing = "; ".join(subset_label(s) for s in defaulted)
            print(
                f"warning: a1 defaulted to 0 for {len(defaulted)} sublink(s): {listing}",
                file=sys.stderr,
            )
    return link


def _cmd_lambda(args) -> int:
    print(format_rational(lescop_lambda(_load_link(args, warn_defaults=True))))
    return 0


def _cmd_walker(args) -> int:
    print(format_rational(walker_lambda(_load_link(args, warn_defaults=True))))
    return 0


def _cmd_h1(args) -> int:
    print(h1_order(_load_link(args, warn_defaults=False)))
    return 0


def _cmd_delta(args) -> int:
    path = parse_path(_read(args.file))
    for index, step in enumerate(path.steps, start=1):
        print(f"step {index} {format_rational(lambda_delta(path.link, step))}")
    print(f"total {format_rational(path_delta(path))}")
    return 0


def _cmd_dedekind(args) -> int:
    print(format_rational(dedekind_sum(args.p, args.q)))
    return 0


def _cmd_lens(args) -> int:
    print(format_rational(lens_lambda(LensSpace(args.p, args.q))))
    return 0


def _cmd_chain(args) -> int:
    tail = parse_rational(args.tail) if args.tail is not None else None
    p, q = chain_to_lens(ChainPresentation(tuple(args.coeffs), tail=tail))
    print(format_rational(Fraction(p, q)))
    return 0


def _cmd_tn(args) -> int:
    if args.n < 1:
        raise ValueError(f"linking number must be >= 1, got {args.n}")
    print(format_rational(mirror_lambda(tn_path(args.n, parse_rational(args.s)))))
    return 0


def _cmd_verify(args) -> int:
    report = run_verification(max_r=args.max_r, max_nb=args.max_nb)
    print(report.to_text())
    if args.report_dir is not None:
        from . import report as report_module

        written = report_module.write_report(report, args.report_dir)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lescop",
        description="Casson-Walker-Lescop invariants of surgery presentations, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("lambda", help="invariant of the manifold presented by a .lnk file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("walker", help="Casson-Walker invariant (rational homology spheres only)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_walker)

    p = sub.add_parser("h1", help="order of the first homology (0 when infinite)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("delta", help="per-step and total invariant jumps along a path file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("dedekind", help="Dedekind sum s(P, Q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("lens", help="invariant of the lens space L(P, Q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_lens)

    p = sub.add_parser("chain", help="reduced p/q of an integer surgery chain")
    p.add_argument("coeffs", type=int, nargs="+")
    p.add_argument("--tail", help="rational tail P/Q subtracted from the last coefficient")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("tn", help="invariant of the twist family link with framings (s, -s)")
    p.add_argument("n", type=int)
    p.add_argument("s")
    p.set_defaults(func=_cmd_tn)

    p = sub.add_parser("verify", help="run the closed-form sweeps and agreement suites")
    p.add_argument("--max-r", type=int, default=50)
    p.add_argument("--max-nb", type=int, default=8)
    p.add_argument("--report-dir", help="also write sweeps.csv and figures here")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
