"""Command line: ``greedysweep {run,verify,study,compare,gen,render}``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
bad input (unreadable files, malformed instances, invalid polygons).
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from ..exact_geom import Q, fmt
from ..generators import KINDS, default_seed, gen_polygon
from ..greedy_driver import STRATEGIES, Config, run
from ..jordan_curve import GeometryError
from ..verify import check_invariants, compare_strategies, convergence_study, deficit, diameter_eps
from .instance import Instance, ParseError, emit_instance, instance_hash, load_instance
from .render import RenderOptions, draw, picture_of_trace, render_svg
from .tables import comparison_csv, convergence_csv
from .trace import read_trace, trace_text

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _rational(text: str):
    try:
        return Q(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _config(args, inst: Instance) -> Config:
    eps = args.eps if args.eps is not None else diameter_eps(inst.polygon)
    return Config(eps=eps, max_steps=args.max_steps, strategy=getattr(args, "strategy", "greedy"),
                  random_seed=getattr(args, "random_seed", 0))


def cmd_run(args) -> int:
    inst = load_instance(args.input)
    res = run(inst.polygon, inst.seed_point, _config(args, inst))
    if args.trace:
        _write(args.trace, trace_text(res))
    if args.svg:
        _write(args.svg, render_svg(res))
    top = res.region.max_wall()
    d = deficit(res, inst.polygon)
    print(f"sweeps: {res.sweep_count}")
    print(f"halt: {res.halt_reason.value}")
    print(f"area: {fmt(res.region.area)}")
    print(f"deficit: {fmt(d)} ({float(d):.6g})")
    print(f"max wall: {fmt(top.length) if top else 'none'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = load_instance(args.input)
    res = run(inst.polygon, inst.seed_point, _config(args, inst))
    report = check_invariants(res, inst.polygon, samples=args.samples, sample_seed=args.sample_seed)
    print(report)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_study(args) -> int:
    inst = load_instance(args.input)
    try:
        eps_list = [Q(e) for e in args.eps_list.split(",")]
        rows = convergence_study(inst.polygon, inst.seed_point, eps_list, args.max_steps)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, convergence_csv(rows))
    return EXIT_OK


def cmd_compare(args) -> int:
    inst = load_instance(args.input)
    names = [s.strip() for s in args.strategies.split(",") if s.strip()]
    try:
        series = compare_strategies(inst.polygon, inst.seed_point, names, args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, comparison_csv(series))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        J = gen_polygon(args.kind, args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write(args.out, emit_instance(Instance(J, default_seed(args.kind, args.n, args.seed))))
    return EXIT_OK


def cmd_render(args) -> int:
    inst = load_instance(args.input)
    with open(args.trace, encoding="utf-8") as fh:
        header, steps = read_trace(fh.read())
    if header.get("instance_sha256") != instance_hash(inst):
        raise InputError("trace was recorded for a different instance")
    pic = picture_of_trace(inst.polygon, header, steps)
    _write(args.out, draw(pic, RenderOptions(hide_walls=args.hide_walls)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greedysweep", description="Greedy sweepline on simple polygons, in exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def run_opts(sp, with_strategy=True):
        sp.add_argument("--input", required=True, help="instance JSON file")
        sp.add_argument("--eps", type=_rational, default=None, help="halt once every wall is shorter (default: diameter/1000)")
        sp.add_argument("--max-steps", type=int, default=10_000, help="cap on the number of sweeps")
        if with_strategy:
            sp.add_argument("--strategy", choices=STRATEGIES, default="greedy")
            sp.add_argument("--random-seed", type=int, default=0)

    sp = sub.add_parser("run", help="run the sweep and print a summary")
    run_opts(sp)
    sp.add_argument("--trace", help="write the JSONL trace here")
    sp.add_argument("--svg", help="write an SVG picture here")
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("verify", help="run and audit every invariant")
    run_opts(sp, with_strategy=False)
    sp.add_argument("--samples", type=int, default=10_000, help="sample points for the inside/outside oracle")
    sp.add_argument("--sample-seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("study", help="deficit for a decreasing list of eps values (CSV)")
    sp.add_argument("--input", required=True)
    sp.add_argument("--eps-list", required=True, help="comma-separated, e.g. 1/2,1/4,1/8")
    sp.add_argument("--max-steps", type=int, default=10_000)
    sp.add_argument("--out", help="CSV file (default stdout)")
    sp.set_defaults(func=cmd_study)

    sp = sub.add_parser("compare", help="per-step deficit and max wall for several strategies (CSV)")
    sp.add_argument("--input", required=True)
    sp.add_argument("--strategies", default="greedy,lifo", help="e.g. greedy,lifo,fifo,random(7)")
    sp.add_argument("--budget", type=int, default=200, help="sweeps per strategy")
    sp.add_argument("--out", help="CSV file (default stdout)")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("gen", help="write a generated instance")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="instance file (default stdout)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("render", help="draw a recorded trace as SVG")
    sp.add_argument("--input", required=True)
    sp.add_argument("--trace", required=True)
    sp.add_argument("--out", help="SVG file (default stdout)")
    sp.add_argument("--hide-walls", action="store_true")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, GeometryError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
