"""JSON documents for curves, lines, point sets and configurations.

Rationals are written as strings (``"-3/2"``, ``"7"``); plain JSON integers are
accepted on input, floats never are.

    curve        {"degree": 3, "coefficients": ["-1120", "560", ...]}   (grlex order)
    lines        {"lines": [["1", "0", "1"], ...]}
    points       {"points": [["-4", "-1", "4"], ...]}
    nine points  {"lines": [...3...], "points_on_a": [...], "points_on_b": [...], "points_on_c": [...]}
    MS config    {"mu": 1, "u": [...], "v": [...], "w": [...], "edges": [["a", "b"], ...]}
    figure       {"window": [xmin, xmax, ymin, ymax], "points": [...], "labels": [...],
                  "lines": [...], "curves": [curve, ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .curves import HomCurve
from .exact import as_rational
from .pascal import NinePointConfig
from .projective import ProjLine, ProjPoint, TriFrame
from .spline import MSConfig


class InputError(ValueError):
    """Malformed input document; carries a location when one is known."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None, col: int | None = None):
        self.source, self.line, self.col = source, line, col
        where = source if line is None else f"{source}:{line}:{col}"
        super().__init__(f"{where}: {message}")


def rat_to_json(x: Fraction) -> str:
    return str(x)


def triple_to_json(t) -> list[str]:
    return [rat_to_json(c) for c in t]


def curve_to_json(C: HomCurve) -> dict:
    return {"degree": C.degree, "coefficients": [rat_to_json(c) for c in C.coeffs]}


class _Reader:
    """Walks a parsed document and reports errors with a line/column guess."""

    def __init__(self, text: str, source: str):
        self.text, self.source = text, source
        try:
            self.doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(exc.msg, source, exc.lineno, exc.colno) from None

    def fail(self, message: str, path: str, token=None):
        line = col = None
        if token is not None:
            idx = self.text.find(json.dumps(token))
            if idx >= 0:
                line = self.text.count("\n", 0, idx) + 1
                col = idx - (self.text.rfind("\n", 0, idx) + 1) + 1
        raise InputError(f"{path}: {message}", self.source, line, col)

    def get(self, obj, key: str, path: str):
        if not isinstance(obj, dict) or key not in obj:
            self.fail(f"missing key {key!r}", path)
        return obj[key]

    def rational(self, value, path: str) -> Fraction:
        if isinstance(value, float):
            self.fail("floating-point numbers are not exact; write a \"p/q\" string", path, value)
        try:
            return as_rational(value)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            self.fail(f"bad rational literal {value!r} ({exc})", path, value)

    def triple(self, value, path: str) -> tuple[Fraction, ...]:
        if not isinstance(value, list) or len(value) != 3:
            self.fail("expected an array of three rationals", path)
        t = tuple(self.rational(v, f"{path}[{i}]") for i, v in enumerate(value))
        if not any(t):
            self.fail("all-zero homogeneous triple", path)
        return t

    def triples(self, value, path: str) -> list[tuple[Fraction, ...]]:
        if not isinstance(value, list):
            self.fail("expected an array", path)
        return [self.triple(v, f"{path}[{i}]") for i, v in enumerate(value)]

    def curve(self, value, path: str) -> HomCurve:
        degree = self.get(value, "degree", path)
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
            self.fail("degree must be a positive integer", f"{path}.degree")
        raw = self.get(value, "coefficients", path)
        if not isinstance(raw, list):
            self.fail("expected an array", f"{path}.coefficients")
        coeffs = [self.rational(v, f"{path}.coefficients[{i}]") for i, v in enumerate(raw)]
        try:
            return HomCurve(degree, tuple(coeffs))
        except ValueError as exc:
            self.fail(str(exc), path)


def _read(path) -> _Reader:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file ({exc.strerror})", str(path)) from None
    return _Reader(text, str(path))


def loads_curve(text: str, source: str = "<input>") -> HomCurve:
    r = _Reader(text, source)
    doc = r.doc["curve"] if isinstance(r.doc, dict) and "curve" in r.doc else r.doc
    return r.curve(doc, "curve")


def load_curve(path) -> HomCurve:
    r = _read(path)
    doc = r.doc["curve"] if isinstance(r.doc, dict) and "curve" in r.doc else r.doc
    return r.curve(doc, "curve")


def _lines(r: _Reader, doc) -> list[ProjLine]:
    if isinstance(doc, dict) and "line" in doc and "lines" not in doc:
        return [ProjLine(r.triple(doc["line"], "line"))]
    return [ProjLine(t) for t in r.triples(r.get(doc, "lines", "$"), "lines")]


def load_lines(path) -> list[ProjLine]:
    r = _read(path)
    return _lines(r, r.doc)


def load_frame(path) -> TriFrame:
    r = _read(path)
    lines = _lines(r, r.doc)
    if len(lines) != 3:
        r.fail(f"a frame needs exactly three lines, got {len(lines)}", "lines")
    try:
        return TriFrame(*lines)
    except ValueError as exc:
        r.fail(str(exc), "lines")


def load_points(path) -> list[ProjPoint]:
    r = _read(path)
    return [ProjPoint(t) for t in r.triples(r.get(r.doc, "points", "$"), "points")]


def nine_point_to_json(cfg: NinePointConfig) -> dict:
    return {
        "lines": [triple_to_json(l) for l in cfg.frame.lines],
        "points_on_a": [triple_to_json(p) for p in cfg.points_on_a],
        "points_on_b": [triple_to_json(p) for p in cfg.points_on_b],
        "points_on_c": [triple_to_json(p) for p in cfg.points_on_c],
    }


def load_nine_point(path) -> NinePointConfig:
    r = _read(path)
    lines = _lines(r, r.doc)
    if len(lines) != 3:
        r.fail("a frame needs exactly three lines", "lines")
    groups = [
        [ProjPoint(t) for t in r.triples(r.get(r.doc, key, "$"), key)]
        for key in ("points_on_a", "points_on_b", "points_on_c")
    ]
    try:
        return NinePointConfig(TriFrame(*lines), *groups)
    except ValueError as exc:
        r.fail(str(exc), "$")


def ms_config_to_json(cfg: MSConfig) -> dict:
    return {
        "mu": cfg.mu,
        "u": triple_to_json(cfg.u),
        "v": triple_to_json(cfg.v),
        "w": triple_to_json(cfg.w),
        "edges": [[rat_to_json(a), rat_to_json(b)] for a, b in cfg.edge_coeffs],
    }


def load_ms_config(path, mu: int | None = None) -> MSConfig:
    r = _read(path)
    doc = r.doc
    file_mu = r.get(doc, "mu", "$")
    if not isinstance(file_mu, int) or isinstance(file_mu, bool) or file_mu < 0:
        r.fail("mu must be a non-negative integer", "mu")
    if mu is not None and mu != file_mu:
        r.fail(f"mu = {file_mu} in file but {mu} requested", "mu")
    u, v, w = (r.triple(r.get(doc, k, "$"), k) for k in ("u", "v", "w"))
    raw = r.get(doc, "edges", "$")
    if not isinstance(raw, list):
        r.fail("expected an array of coefficient pairs", "edges")
    pairs = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            r.fail("expected a pair [a, b]", f"edges[{i}]")
        pairs.append(tuple(r.rational(x, f"edges[{i}][{j}]") for j, x in enumerate(pair)))
    try:
        return MSConfig(file_mu, u, v, w, pairs)
    except ValueError as exc:
        r.fail(str(exc), "$")


def load_figure(path) -> dict:
    r = _read(path)
    doc = r.doc
    window = r.get(doc, "window", "$")
    if not isinstance(window, list) or len(window) != 4:
        r.fail("window must be [xmin, xmax, ymin, ymax]", "window")
    fig = {
        "window": tuple(r.rational(x, f"window[{i}]") for i, x in enumerate(window)),
        "points": [ProjPoint(t) for t in r.triples(doc.get("points", []), "points")],
        "lines": [ProjLine(t) for t in r.triples(doc.get("lines", []), "lines")],
        "curves": [r.curve(c, f"curves[{i}]") for i, c in enumerate(doc.get("curves", []))],
    }
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(fig["points"])):
        r.fail("labels must list one string per point", "labels")
    fig["labels"] = [str(x) for x in labels] if labels is not None else None
    return fig


def dump(doc: dict, path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
