"""Command line interface: ``quartica run|reproduce|eval|plot|atlas``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import QuarticaError


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_run(args) -> int:
    from .dsl import evaluate, parse

    try:
        result = evaluate(parse(Path(args.file).read_text(encoding="utf-8")))
    except QuarticaError as exc:
        print(f"{args.file}:{exc}", file=sys.stderr)
        return 1
    _emit(result.dumps() if args.report == "json" else result.text_report(), args.out)
    return _exit_code(result.statuses)


def cmd_reproduce(args) -> int:
    from .reproduce import dumps, reproduce

    groups = None if args.section == "all" else [int(args.section)]
    reports = reproduce(groups, jobs=args.jobs)
    text = dumps(reports)
    if args.out:
        Path(args.out).write_text(text + "\n")
        for r in reports:
            print(f"{r.status:12} {r.id:44} {r.elapsed_ms:9.0f} ms")
    else:
        print(text)
    return _exit_code(r.status for r in reports)


def cmd_eval(args) -> int:
    from .dsl.evaluator import evaluate_expression, show
    from .field import make_tower

    try:
        print(show(evaluate_expression(args.expr, make_tower(args.field))))
    except QuarticaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_plot(args) -> int:
    from .plot import plot_svg

    ids = [s for s in args.ids.split(",") if s] if args.ids else []
    try:
        svg = plot_svg(ids, chart=args.chart, out=args.out)
    except QuarticaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not args.out:
        sys.stdout.write(svg)
    return 0


def cmd_atlas(args) -> int:
    from .atlas import atlas_get, ids

    try:
        if args.id:
            print(json.dumps(atlas_get(args.id).to_json(), indent=2))
        else:
            for i in ids():
                print(f"{i:28} {atlas_get(i).description}")
    except QuarticaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _exit_code(statuses) -> int:
    from .reproduce import exit_code

    return exit_code(statuses)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quartica", description="Exact checks on plane quartics and their tangency configurations.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="evaluate a .qsc scenario")
    r.add_argument("file")
    r.add_argument("--report", choices=("json", "text"), default="text")
    r.add_argument("--out")
    r.set_defaults(func=cmd_run)

    rp = sub.add_parser("reproduce", help="run the fixed verification suite")
    rp.add_argument("--section", choices=("2", "3", "4", "5", "all"), default="all")
    rp.add_argument("--out")
    rp.add_argument("--jobs", type=int, default=1)
    rp.set_defaults(func=cmd_reproduce)

    e = sub.add_parser("eval", help="evaluate one expression")
    e.add_argument("expr")
    e.add_argument("--field", default="Q()")
    e.set_defaults(func=cmd_eval)

    pl = sub.add_parser("plot", help="draw atlas entries as SVG")
    pl.add_argument("--ids", default="")
    pl.add_argument("--chart", default="z=1")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_plot)

    a = sub.add_parser("atlas", help="list atlas entries or show one")
    a.add_argument("id", nargs="?")
    a.set_defaults(func=cmd_atlas)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
