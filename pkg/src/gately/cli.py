"""Command-line interface.

Exit codes: 0 success, 1 the requested computation is undefined for the
game, 2 bad usage or an unreadable game file.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction

from .analysis import alpha_core_range, core_membership, core_nonempty, minimax_oracle, nucleolus
from .errors import AnalysisError, GameFormatError, GatelyError
from .game import dual_game, harsanyi_dividends
from .generators import GeneratorConfig, fixture_table, generate
from .io import LabelledGame, coalition_label, default_labels, format_number, load_game, parse_rational, serialise
from .report import ANALYSES, emit_report
from .values import (
    alpha_gately_value,
    dual_alpha_gately,
    equal_division,
    gately_value,
    shapley_value,
)

VERIFY_TOL = 1e-5


class UsageError(Exception):
    pass


def _alpha(text: str) -> Fraction:
    try:
        a = parse_rational(text)
    except GameFormatError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if a <= 0:
        raise argparse.ArgumentTypeError("alpha must be positive")
    return a


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _print_allocation(doc: LabelledGame, x) -> None:
    for lab, v in zip(doc.labels, x):
        print(f"{lab}: {format_number(v)}")


def cmd_info(args) -> int:
    doc = load_game(args.file)
    sys.stdout.write(emit_report(doc.game, {"classify"}, args.format, doc.labels, name=doc.name))
    return 0


def cmd_report(args) -> int:
    doc = load_game(args.file)
    requested = {a.strip() for a in args.analyses.split(",") if a.strip()}
    unknown = requested - set(ANALYSES)
    if unknown:
        raise UsageError(f"unknown analyses: {', '.join(sorted(unknown))}")
    sys.stdout.write(emit_report(doc.game, requested, args.format, doc.labels, args.alpha, doc.name))
    return 0


def cmd_value(args) -> int:
    doc = load_game(args.file)
    g = doc.game
    method = args.method
    if method == "gately":
        x = gately_value(g) if args.alpha is None else alpha_gately_value(g, args.alpha)
    elif method == "dual-gately":
        x = dual_alpha_gately(g, 1 if args.alpha is None else args.alpha)
    elif args.alpha is not None:
        raise UsageError(f"--alpha does not apply to --method {method}")
    elif method == "shapley":
        x = shapley_value(g)
    elif method == "nucleolus":
        x = nucleolus(g)
    else:
        x = equal_division(g)
    _print_allocation(doc, x)
    return 0


def cmd_check_core(args) -> int:
    doc = load_game(args.file)
    g = doc.game
    if args.point is not None and args.alpha is not None:
        raise UsageError("give either --point or --alpha, not both")
    if args.point is None and args.alpha is None:
        status = core_nonempty(g)
        print(f"core nonempty: {str(status.nonempty).lower()}")
        if status.witness is not None:
            print("witness: " + ", ".join(f"{lab}: {format_number(v)}" for lab, v in zip(doc.labels, status.witness)))
        return 0
    if args.point is not None:
        try:
            x = [parse_rational(p) for p in args.point.split(",")]
        except GameFormatError as exc:
            raise UsageError(str(exc)) from None
        if len(x) != g.n:
            raise UsageError(f"--point needs {g.n} entries, got {len(x)}")
    else:
        x = alpha_gately_value(g, args.alpha)
    cert = core_membership(g, x)
    print("point: " + ", ".join(f"{lab}: {format_number(v)}" for lab, v in zip(doc.labels, x)))
    print(f"in core: {str(cert.member).lower()}")
    if not cert.efficient:
        print("not efficient: payoffs do not add up to the worth of the grand coalition")
    for s, deficit in cert.violated_coalitions:
        print(f"violated: {coalition_label(s, doc.labels)} deficit {format_number(deficit)}")
    return 0


def cmd_alpha_range(args) -> int:
    doc = load_game(args.file)
    rng = alpha_core_range(doc.game, grid=args.grid, refine_tol=args.tol)
    print(f"probed alpha in [{rng.probe_grid[0]:g}, {rng.probe_grid[-1]:g}] on {len(rng.probe_grid)} points")
    if rng.empty:
        print("alpha-Gately value is outside the Core for every probed alpha")
    for iv in rng.intervals:
        lo = f"{iv.lo:.12g}" + (" (approx)" if iv.approx_lo else "")
        hi = f"{iv.hi:.12g}" + (" (approx)" if iv.approx_hi else "")
        if iv.degenerate:
            print(f"single point: {lo}")
        else:
            print(f"interval: [{lo}, {hi}]")
    return 0


def cmd_dividends(args) -> int:
    doc = load_game(args.file)
    d = harsanyi_dividends(doc.game)
    for s in d.carrier:
        print(f"{coalition_label(s, doc.labels)}: {format_number(d[s])}")
    return 0


def cmd_dual(args) -> int:
    doc = load_game(args.file)
    name = f"{doc.name}_dual" if doc.name else None
    text = serialise(dual_game(doc.game), doc.labels, name)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    return 0


def cmd_fixtures(args) -> int:
    os.makedirs(args.emit, exist_ok=True)
    for name, fx in fixture_table().items():
        path = os.path.join(args.emit, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialise(fx.game, fx.labels, name, fx.description))
        print(path)
    return 0


def cmd_verify(args) -> int:
    doc = load_game(args.file)
    g = doc.game
    closed = alpha_gately_value(g, args.alpha)
    oracle = minimax_oracle(g, 1 / args.alpha)
    worst = max(abs(float(c) - o) for c, o in zip(closed, oracle))
    for lab, c, o in zip(doc.labels, closed, oracle):
        print(f"{lab}: closed form {format_number(c)}, oracle {o:.12g}")
    ok = worst <= args.tol
    print(f"max deviation {worst:.3e}: {'agree' if ok else 'DISAGREE'} at tolerance {args.tol:g}")
    return 0 if ok else 1


def cmd_generate(args) -> int:
    try:
        cfg = GeneratorConfig.from_target(args.target, seed=args.seed, n=args.n, worth_bound=args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = generate(cfg)
    text = serialise(g, default_labels(g.n), f"generated_{cfg.class_target}_{args.seed}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gately", description="Exact analysis of TU games.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", help="classify a game")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("report", help="run several analyses")
    s.add_argument("file")
    s.add_argument("--analyses", default="classify,gately,shapley,nucleolus",
                   help=f"comma-separated subset of {','.join(ANALYSES)}")
    s.add_argument("--alpha", type=_alpha)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("value", help="compute a value")
    s.add_argument("file")
    s.add_argument("--method", choices=("gately", "shapley", "nucleolus", "equal", "dual-gately"), default="gately")
    s.add_argument("--alpha", type=_alpha)
    s.set_defaults(func=cmd_value)

    s = sub.add_parser("check-core", help="Core membership or non-emptiness")
    s.add_argument("file")
    s.add_argument("--point", help="comma-separated payoffs in player order")
    s.add_argument("--alpha", type=_alpha, help="check the alpha-Gately value")
    s.set_defaults(func=cmd_check_core)

    s = sub.add_parser("alpha-range", help="alphas whose alpha-Gately value is in the Core")
    s.add_argument("file")
    s.add_argument("--tol", type=_positive_float, default=1e-6)
    s.add_argument("--grid", type=int, default=601)
    s.set_defaults(func=cmd_alpha_range)

    s = sub.add_parser("dividends", help="Harsanyi dividends")
    s.add_argument("file")
    s.set_defaults(func=cmd_dividends)

    s = sub.add_parser("dual", help="write the dual game")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("fixtures", help="write the fixture games")
    s.add_argument("--emit", required=True, metavar="DIR")
    s.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("verify", help="compare the minimax oracle with the closed form")
    s.add_argument("file")
    s.add_argument("--alpha", type=_alpha, required=True)
    s.add_argument("--tol", type=_positive_float, default=VERIFY_TOL)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("generate", help="draw a random game")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--target", default="regular", help="e.g. regular, k_game(2), partition_game(2,3)")
    s.add_argument("--bound", type=int, default=10)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except AnalysisError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (GameFormatError, UsageError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (GatelyError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
