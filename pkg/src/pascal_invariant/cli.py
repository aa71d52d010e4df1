"""Command-line checker.

Exit status: 0 when the checked statement holds (or a computation succeeds),
1 when it is falsified, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .curves import HomCurve, char_number, conic_through_six, curve_beyond_frame, evaluate, fit_curves
from .generators import (
    random_conic_hexagon,
    random_curve_frame,
    random_generic_hexagon,
    random_ms_config,
)
from .jsonio import InputError
from .pascal import CriterionError, HexConfig, pascal_mapping, pascal_type_cubic, phi_hexagon, verify_pascal
from .projective import GeometryError
from .render import render_svg
from .spline import MSConfig, dual_config, pencil_product, product_criterion, spline_dim
from . import worked_example as ex


class Outcome:
    """Exit status plus the text lines and JSON document describing a run."""

    def __init__(self, status: int, lines: list[str], doc: dict):
        self.status, self.lines, self.doc = status, lines, doc


def fmt_rat(x: Fraction) -> str:
    return str(x)


def normalized(p) -> tuple[Fraction, ...]:
    """Representative with its last nonzero coordinate equal to 1."""
    last = next(c for c in reversed(p.coords) if c != 0)
    return tuple(c / last for c in p.coords)


def fmt_point(p) -> str:
    return "(" + ", ".join(fmt_rat(c) for c in normalized(p)) + ")"


def point_json(p) -> list[str]:
    return [fmt_rat(c) for c in normalized(p)]


def fmt_curve(C: HomCurve) -> str:
    return str(C.canonical())


def curve_json(C: HomCurve) -> dict:
    return jsonio.curve_to_json(C.canonical())


def yes(flag: bool) -> str:
    return "true" if flag else "false"


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError("missing option " + ", ".join("--" + m.replace("_", "-") for m in missing), "<command line>")


# -- char-number --------------------------------------------------------------


def cmd_char_number(args) -> Outcome:
    if args.curve is None and args.lines is None:
        _need(args, "degree")
        rng = random.Random(args.seed)
        expected = (-1) ** args.degree
        ok = 0
        for _ in range(args.trials):
            C, frame = random_curve_frame(rng, args.degree)
            ok += char_number(C, frame) == expected
        verified = ok == args.trials
        line = f"degree={args.degree} trials={args.trials} verified={ok}"
        doc = {"degree": args.degree, "trials": args.trials, "seed": args.seed, "verified": ok, "all": verified}
        return Outcome(0 if verified else 1, [line], doc)
    _need(args, "curve", "lines")
    C = jsonio.load_curve(args.curve)
    frame = jsonio.load_frame(args.lines)
    value = char_number(C, frame)
    expected = Fraction((-1) ** C.degree)
    doc = {"char_number": fmt_rat(value), "expected": fmt_rat(expected), "verified": value == expected}
    return Outcome(0 if value == expected else 1, [fmt_rat(value)], doc)


# -- hexagons -----------------------------------------------------------------


def _hexagon(path) -> HexConfig:
    points = jsonio.load_points(path)
    if len(points) != 6:
        raise InputError(f"a hexagon needs exactly six points, got {len(points)}", str(path))
    return HexConfig(points)


def cmd_pascal_check(args) -> Outcome:
    if args.points is None:
        rng = random.Random(args.seed)
        on_conic = sum(verify_pascal(random_conic_hexagon(rng)[0]) for _ in range(args.trials))
        generic = sum(not verify_pascal(random_generic_hexagon(rng)) for _ in range(args.trials))
        verified = on_conic == generic == args.trials
        line = f"trials={args.trials} conic_collinear={on_conic} generic_not_collinear={generic}"
        doc = {
            "trials": args.trials,
            "seed": args.seed,
            "conic_collinear": on_conic,
            "generic_not_collinear": generic,
            "all": verified,
        }
        return Outcome(0 if verified else 1, [line], doc)
    hexagon = _hexagon(args.points)
    collinear = verify_pascal(hexagon)
    return Outcome(0 if collinear else 1, [f"collinear={yes(collinear)}"], {"collinear": collinear})


def cmd_pascal_map(args) -> Outcome:
    hexagon = _hexagon(args.points)
    qs = phi_hexagon(hexagon)
    chis = pascal_mapping(hexagon)
    collinear = verify_pascal(hexagon)
    lines = [f"u = {fmt_point(hexagon.u)}", f"v = {fmt_point(hexagon.v)}", f"w = {fmt_point(hexagon.w)}"]
    lines += [f"q{i} = {fmt_point(q)}" for i, q in enumerate(qs, 1)]
    lines += [f"chi{i} = {fmt_point(c)}" for i, c in enumerate(chis, 1)]
    lines.append(f"collinear={yes(collinear)}")
    doc = {
        "vertices": [point_json(p) for p in hexagon.vertices],
        "q": [point_json(q) for q in qs],
        "chi": [point_json(c) for c in chis],
        "collinear": collinear,
    }
    return Outcome(0, lines, doc)


def cmd_pascal_cubic(args) -> Outcome:
    cfg = jsonio.load_nine_point(args.config)
    try:
        result = pascal_type_cubic(cfg)
    except CriterionError as exc:
        product = exc.product
        shown = "degenerate" if product is None else fmt_rat(product)
        return Outcome(1, [f"not on a cubic: ratio product = {shown}"], {"on_cubic": False, "product": shown})
    lines = [f"r{i} = {fmt_point(p)}" for i, p in enumerate(result.points, 1)]
    lines.append(f"conic: {fmt_curve(result.curve)}" if result.curve else "conic: none")
    doc = {
        "on_cubic": True,
        "points": [point_json(p) for p in result.points],
        "conic": curve_json(result.curve) if result.curve else None,
    }
    return Outcome(0 if result.curve else 1, lines, doc)


# -- curve fitting ------------------------------------------------------------


def cmd_fit_curve(args) -> Outcome:
    points = jsonio.load_points(args.points)
    if args.degree < 1:
        raise InputError("degree must be positive", "<command line>")
    basis = fit_curves(points, args.degree)
    lines = [f"dimension={len(basis)}"] + [fmt_curve(C) for C in basis]
    doc = {"degree": args.degree, "dimension": len(basis), "basis": [curve_json(C) for C in basis]}
    found = bool(basis)
    if args.frame is not None:
        frame = jsonio.load_frame(args.frame)
        beyond = curve_beyond_frame(points, args.degree, frame)
        found = beyond is not None
        lines.append(f"beyond_frame: {fmt_curve(beyond)}" if found else "beyond_frame: none")
        doc["beyond_frame"] = curve_json(beyond) if found else None
    return Outcome(0 if found else 1, lines, doc)


def cmd_conic_through(args) -> Outcome:
    points = jsonio.load_points(args.points)
    if len(points) != 6:
        raise InputError(f"need exactly six points, got {len(points)}", str(args.points))
    on_conic = conic_through_six(points)
    return Outcome(0 if on_conic else 1, [f"on_conic={yes(on_conic)}"], {"on_conic": on_conic})


# -- splines ------------------------------------------------------------------


def _criterion(cfg: MSConfig):
    try:
        return product_criterion(cfg), fmt_rat(pencil_product(cfg))
    except GeometryError:
        return None, None


def cmd_spline_dim(args) -> Outcome:
    if args.config is None:
        _need(args, "mu")
        rng = random.Random(args.seed)
        agree = 0
        for i in range(args.trials):
            cfg = random_ms_config(rng, args.mu, singular=(i % 2 == 0))
            agree += spline_dim(cfg).singular == product_criterion(cfg)
        verified = agree == args.trials
        line = f"mu={args.mu} trials={args.trials} agree={agree}"
        doc = {"mu": args.mu, "trials": args.trials, "seed": args.seed, "agree": agree, "all": verified}
        return Outcome(0 if verified else 1, [line], doc)
    cfg = jsonio.load_ms_config(args.config, args.mu)
    report = spline_dim(cfg)
    criterion, product = _criterion(cfg)
    agrees = criterion is None or criterion == report.singular
    doc = {
        "mu": cfg.mu,
        "dim": report.total_dim,
        "generic_dim": report.generic_dim,
        "tau": report.tau,
        "singular": report.singular,
        "pencil_product": product,
        "criterion_agrees": agrees,
    }
    return Outcome(0 if agrees else 1, [f"dim={report.total_dim} singular={yes(report.singular)}"], doc)


# -- worked example -----------------------------------------------------------

SINGULAR_MS = MSConfig(
    1,
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (1, 1)],
)

EXAMPLE_WINDOW = (-3, 3, -3, 3)


def example_figure() -> dict:
    return {
        "window": EXAMPLE_WINDOW,
        "points": list(ex.POINTS),
        "labels": [f"p{i}" for i in range(1, 10)],
        "lines": list(ex.FRAME.lines),
        "curves": [ex.CUBIC, ex.CONIC],
    }


def _figure_json(fig: dict) -> dict:
    return {
        "window": [fmt_rat(Fraction(x)) for x in fig["window"]],
        "points": [jsonio.triple_to_json(p) for p in fig["points"]],
        "labels": fig["labels"],
        "lines": [jsonio.triple_to_json(l) for l in fig["lines"]],
        "curves": [jsonio.curve_to_json(C) for C in fig["curves"]],
    }


def emit_example_config(directory) -> list[str]:
    """Write the worked example's inputs; returns the file names written."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    cfg = ex.nine_point_config()
    docs = {
        "cubic.json": {"curve": jsonio.curve_to_json(ex.CUBIC)},
        "abc.json": {"lines": [jsonio.triple_to_json(l) for l in ex.FRAME.lines]},
        "nine_point.json": jsonio.nine_point_to_json(cfg),
        "hexagon.json": {"points": [jsonio.triple_to_json(p) for p in cfg.hexagon_points()]},
        "conic_points.json": {"points": [jsonio.triple_to_json(p) for p in ex.PASCAL_IMAGES + cfg.residual_points()]},
        "ms.json": jsonio.ms_config_to_json(SINGULAR_MS),
        "ms_dual.json": jsonio.ms_config_to_json(
            dual_config(ex.FRAME, cfg.points_on_a, cfg.points_on_b, cfg.points_on_c)
        ),
        "figure.json": _figure_json(example_figure()),
    }
    for name, doc in docs.items():
        jsonio.dump(doc, out / name)
    return list(docs)


def cmd_verify_example(args) -> Outcome:
    r = ex.reproduce()
    checks = {
        "points_on_cubic": all(evaluate(ex.CUBIC, p) == 0 for p in r["points"]),
        "points_on_frame": all(
            r["points"][i].on(line)
            for line, group in zip(ex.FRAME.lines, ((0, 1, 6), (2, 3, 7), (4, 5, 8)))
            for i in group
        ),
        "vertices": r["vertices"] == ex.VERTICES,
        "q": r["q"] == ex.OPPOSITE_SIDE_POINTS,
        "chi": r["chi"] == ex.PASCAL_IMAGES,
        "conic": r["conic"] is not None and r["conic"].is_proportional(ex.CONIC),
        "char_number": r["char_number"] == -1,
    }
    verified = all(checks.values())
    lines = [f"cubic: {fmt_curve(ex.CUBIC)}"]
    lines += [f"line {n}: {fmt_point(l)}" for n, l in zip("abc", ex.FRAME.lines)]
    lines += [f"p{i} = {fmt_point(p)}" for i, p in enumerate(r["points"], 1)]
    lines += [f"{n} = {fmt_point(p)}" for n, p in zip("uvw", r["vertices"])]
    lines += [f"q{i} = {fmt_point(q)}" for i, q in enumerate(r["q"], 1)]
    lines += [f"chi{i} = {fmt_point(c)}" for i, c in enumerate(r["chi"], 1)]
    lines.append(f"conic: {fmt_curve(r['conic'])}")
    lines.append(f"char_number = {fmt_rat(r['char_number'])}")
    lines += [f"check {k}: {yes(v)}" for k, v in checks.items()]
    lines.append(f"verified={yes(verified)}")
    doc = {
        "cubic": curve_json(ex.CUBIC),
        "lines": [point_json(l) for l in ex.FRAME.lines],
        "points": [point_json(p) for p in r["points"]],
        "vertices": [point_json(p) for p in r["vertices"]],
        "q": [point_json(q) for q in r["q"]],
        "chi": [point_json(c) for c in r["chi"]],
        "conic": curve_json(r["conic"]),
        "char_number": fmt_rat(r["char_number"]),
        "checks": checks,
        "verified": verified,
    }
    if args.emit_config is not None:
        doc["emitted"] = emit_example_config(args.emit_config)
    if args.svg is not None:
        fig = example_figure()
        Path(args.svg).write_text(render_svg(fig["window"], fig["points"], fig["lines"], fig["curves"], fig["labels"]))
    return Outcome(0 if verified else 1, lines, doc)


# -- rendering ----------------------------------------------------------------


def cmd_render(args) -> Outcome:
    fig = jsonio.load_figure(args.figure)
    try:
        svg = render_svg(fig["window"], fig["points"], fig["lines"], fig["curves"], fig["labels"], args.size, args.density)
    except ValueError as exc:
        raise InputError(str(exc), str(args.figure)) from None
    if args.output == "-":
        sys.stdout.write(svg)
        return Outcome(0, [], {})
    Path(args.output).write_text(svg, encoding="utf-8")
    return Outcome(0, [f"wrote {args.output}"], {"output": args.output})


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="verdict format")
    batch = argparse.ArgumentParser(add_help=False)
    batch.add_argument("--trials", type=int, default=100, help="random instances in batch mode")
    batch.add_argument("--seed", type=int, default=0, help="seed for batch mode")

    parser = argparse.ArgumentParser(prog="pascal-invariant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-number", parents=[common, batch], help="characteristic number of a curve over a frame")
    p.add_argument("--curve", help="curve JSON")
    p.add_argument("--lines", help="JSON with three frame lines")
    p.add_argument("--degree", type=int, help="degree for random batch mode")
    p.set_defaults(func=cmd_char_number)

    p = sub.add_parser("pascal-check", parents=[common, batch], help="collinearity of the Pascal images of a hexagon")
    p.add_argument("--points", help="JSON with six points; omit for random batch mode")
    p.set_defaults(func=cmd_pascal_check)

    p = sub.add_parser("pascal-map", parents=[common], help="opposite-side points and Pascal images")
    p.add_argument("--points", required=True, help="JSON with six points")
    p.set_defaults(func=cmd_pascal_map)

    p = sub.add_parser("pascal-cubic", parents=[common], help="conic through Pascal images of nine cubic points")
    p.add_argument("--config", required=True, help="nine-point JSON")
    p.set_defaults(func=cmd_pascal_cubic)

    p = sub.add_parser("fit-curve", parents=[common], help="curves of given degree through points")
    p.add_argument("--points", required=True, help="points JSON")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--frame", help="frame lines JSON; also look for a curve not containing them")
    p.set_defaults(func=cmd_fit_curve)

    p = sub.add_parser("conic-through", parents=[common], help="whether six points lie on a conic")
    p.add_argument("--points", required=True, help="JSON with six points")
    p.set_defaults(func=cmd_conic_through)

    p = sub.add_parser("spline-dim", parents=[common, batch], help="spline space dimension on a Morgan-Scott configuration")
    p.add_argument("--mu", type=int, help="smoothness (checked against the file)")
    p.add_argument("--config", help="configuration JSON; omit for random batch mode")
    p.set_defaults(func=cmd_spline_dim)

    p = sub.add_parser("verify-example", parents=[common], help="recompute the nine-point cubic example")
    p.add_argument("--emit-config", metavar="DIR", help="write the example's input files to DIR")
    p.add_argument("--svg", metavar="PATH", help="write a drawing of the example")
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("render", parents=[common], help="draw a figure as SVG")
    p.add_argument("--figure", required=True, help="figure JSON")
    p.add_argument("--output", required=True, help="SVG path, or - for stdout")
    p.add_argument("--density", type=int, default=512, help="curve sampling grid (cosmetic)")
    p.add_argument("--size", type=int, default=600, help="drawing size in pixels")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        outcome = args.func(args)
    except (InputError, GeometryError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        if outcome.doc:
            print(json.dumps(outcome.doc, indent=2))
    else:
        for line in outcome.lines:
            print(line)
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
