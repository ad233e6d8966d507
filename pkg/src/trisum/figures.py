"""Deterministic SVG 1.1 figures of the constructions.

Every figure is assembled from exact points and lines.  Incidences the figure
claims are registered with the drawing and checked on the rational data before
anything is converted to screen coordinates; rounding happens only when the
SVG text is written.  Points at infinity, and points too far out to fit, are
drawn as labeled arrows at the canvas edge.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape

from trisum import configurations as cfg
from trisum import triangles as tg
from trisum.errors import DegenerateConstruction, GeometryError
from trisum.projective import (
    LINE_AT_INFINITY,
    HomLine,
    HomPoint,
    conic_rational_point,
    incident,
    join,
)

WIDTH = HEIGHT = 640
MARGIN = 48
EDGE = 14  # arrow tips stop this far from the canvas border
ARROW_LEN = 40

COLORS = {
    "A": "#1f5fbf", "B": "#c0392b", "C": "#1e8449", "E": "#7f7f7f",
    "aux": "#999999", "axis": "#8e44ad", "result": "#1e8449", "warn": "#d35400",
}


class FigureError(GeometryError):
    """A claimed incidence does not hold in the exact data."""


def _fmt(v):
    # the one place exact values become decimals
    s = f"{float(v):.2f}"
    return "0.00" if s == "-0.00" else s


@dataclass
class Drawing:
    title: str
    points: dict = field(default_factory=dict)  # label -> (HomPoint, color, fit)
    lines: list = field(default_factory=list)  # (label, HomLine, color, dashed)
    polygons: list = field(default_factory=list)  # (vertex labels, color)
    curves: list = field(default_factory=list)  # (HomPoints, color)
    incidences: list = field(default_factory=list)
    warning: str = None

    def point(self, label, p, color="#000000", fit=True):
        self.points[label] = (p, color, fit)
        return p

    def line(self, label, l, color="#999999", dashed=False):
        self.lines.append((label, l, color, dashed))
        return l

    def line_through(self, label, p, q, color="#999999", dashed=False, check=()):
        l = cfg.join_as(self.points[p][0], self.points[q][0], label or f"{p}{q}")
        self.line(label, l, color, dashed)
        self.require(l, (p, q, *check))
        return l

    def polygon(self, labels, color):
        self.polygons.append((tuple(labels), color))

    def curve(self, pts, color):
        self.curves.append((tuple(pts), color))

    def require(self, line, labels):
        for lab in labels:
            self.incidences.append((lab, line))

    def check(self):
        for lab, line in self.incidences:
            if not incident(self.points[lab][0], line):
                raise FigureError(f"{lab} is not on {line!r}")

    def render(self):
        self.check()
        return _Renderer(self).svg()


class _Renderer:
    def __init__(self, d):
        self.d = d
        fit = [p.affine() for p, _, f in d.points.values() if f and not p.is_infinite]
        fit += [q.affine() for pts, _ in d.curves for q in pts]
        if not fit:
            fit = [(Fraction(0), Fraction(0))]
        xs = [x for x, _ in fit]
        ys = [y for _, y in fit]
        dx = max(max(xs) - min(xs), Fraction(1))
        dy = max(max(ys) - min(ys), Fraction(1))
        self.scale = min(Fraction(WIDTH - 2 * MARGIN) / dx, Fraction(HEIGHT - 2 * MARGIN) / dy)
        self.cx = (max(xs) + min(xs)) / 2
        self.cy = (max(ys) + min(ys)) / 2

    def screen(self, x, y):
        return (WIDTH / Fraction(2) + (x - self.cx) * self.scale,
                HEIGHT / Fraction(2) - (y - self.cy) * self.scale)

    def world(self, sx, sy):
        return (self.cx + (sx - WIDTH / Fraction(2)) / self.scale,
                self.cy - (sy - HEIGHT / Fraction(2)) / self.scale)

    def on_canvas(self, p):
        if p.is_infinite:
            return False
        sx, sy = self.screen(*p.affine())
        return EDGE <= sx <= WIDTH - EDGE and EDGE <= sy <= HEIGHT - EDGE

    def clip(self, line):
        """Endpoints of the visible part of an affine line, exactly."""
        a, b, c = line.coords
        x0, y1 = self.world(0, 0)
        x1, y0 = self.world(WIDTH, HEIGHT)
        hits = set()
        if b != 0:
            for x in (x0, x1):
                y = -(a * x + c) / Fraction(b)
                if y0 <= y <= y1:
                    hits.add((x, y))
        if a != 0:
            for y in (y0, y1):
                x = -(b * y + c) / Fraction(a)
                if x0 <= x <= x1:
                    hits.add((x, y))
        if len(hits) < 2:
            return None
        hits = sorted(hits)
        return hits[0], hits[-1]

    def edge_arrow(self, p):
        """Tip and tail of an arrow at the border pointing toward p."""
        if p.is_infinite:
            dx, dy = float(p.coords[0]), -float(p.coords[1])
        else:
            x, y = self.screen(*p.affine())
            dx, dy = float(x) - WIDTH / 2, float(y) - HEIGHT / 2
        norm = math.hypot(dx, dy)
        ux, uy = dx / norm, dy / norm
        half_w, half_h = WIDTH / 2 - EDGE, HEIGHT / 2 - EDGE
        t = min(half_w / abs(ux) if ux else math.inf, half_h / abs(uy) if uy else math.inf)
        tip = (WIDTH / 2 + t * ux, HEIGHT / 2 + t * uy)
        tail = (tip[0] - ARROW_LEN * ux, tip[1] - ARROW_LEN * uy)
        return tip, tail, (ux, uy)

    def svg(self):
        d = self.d
        out = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
            f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
            f"<title>{escape(d.title)}</title>",
            "<defs>",
            '<marker id="arrow" markerWidth="10" markerHeight="10" refX="9" refY="5" '
            'orient="auto" markerUnits="strokeWidth">',
            '<path d="M0,0 L10,5 L0,10 z" fill="#333333"/>',
            "</marker>",
            "</defs>",
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        ]
        out.append('<g id="curves" fill="none" stroke-width="1.5">')
        for pts, color in d.curves:
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in
                              (self.screen(*q.affine()) for q in pts))
            out.append(f'<polyline points="{coords}" stroke="{color}"/>')
        out.append("</g>")
        out.append('<g id="polygons" stroke-width="2">')
        for labels, color in d.polygons:
            pts = [d.points[lab][0] for lab in labels]
            if any(p.is_infinite for p in pts):
                continue
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in
                              (self.screen(*p.affine()) for p in pts))
            out.append(f'<polygon points="{coords}" fill="{color}" fill-opacity="0.08" '
                       f'stroke="{color}"/>')
        out.append("</g>")
        out.append('<g id="lines" stroke-width="1">')
        for label, line, color, dashed in d.lines:
            if line == LINE_AT_INFINITY:
                continue
            seg = self.clip(line)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = (self.screen(*q) for q in seg)
            dash = ' stroke-dasharray="6,4"' if dashed else ""
            out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                       f'stroke="{color}"{dash}/>')
            if label:
                out.append(self._text(x2, y2, label, color, inward=True))
        out.append("</g>")
        out.append('<g id="points">')
        arrows = []
        for label, (p, color, _) in d.points.items():
            if not self.on_canvas(p):
                arrows.append((label, p, color))
                continue
            x, y = self.screen(*p.affine())
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="{color}"/>')
            out.append(f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-family="sans-serif" '
                       f'font-size="13" fill="{color}">{escape(label)}</text>')
        out.append("</g>")
        out.append('<g id="arrows" stroke="#333333" stroke-width="1.5">')
        for label, p, color in arrows:
            tip, tail, (ux, uy) = self.edge_arrow(p)
            out.append(f'<line x1="{_fmt(tail[0])}" y1="{_fmt(tail[1])}" x2="{_fmt(tip[0])}" '
                       f'y2="{_fmt(tip[1])}" stroke="{color}" marker-end="url(#arrow)"/>')
            lx, ly = tail[0] - 14 * ux, tail[1] - 14 * uy
            out.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="sans-serif" '
                       f'font-size="13" fill="{color}" stroke="none" '
                       f'text-anchor="middle">{escape(label)}</text>')
        out.append("</g>")
        if d.warning:
            out.append(f'<text x="{MARGIN}" y="{HEIGHT - 16}" font-family="sans-serif" '
                       f'font-size="14" fill="{COLORS["warn"]}">WARNING: '
                       f"{escape(d.warning)}</text>")
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def _text(self, x, y, label, color, inward=False):
        if inward:
            x = min(max(x, Fraction(EDGE)), WIDTH - 4 * EDGE)
            y = min(max(y, Fraction(2 * EDGE)), HEIGHT - EDGE)
        return (f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-family="sans-serif" font-size="12" '
                f'fill="{color}" stroke="none">{escape(label)}</text>')


# -- default scenes ------------------------------------------------------

def _pt(x, y):
    return HomPoint(Fraction(x), Fraction(y))


DEFAULT_CENTRAL = cfg.CentralScene(
    _pt(-5, 0),
    (_pt(6, 4), _pt(-4, 5), _pt(4, 1)),
    (_pt("-4/3", "4/3"), _pt("-13/3", "10/3"), _pt("-37/2", "-3/2")),
)

DEFAULT_AXIS = cfg.AxisScene(
    HomLine(0, 1, 4),
    (_pt(8, -4), _pt(-5, -4), _pt(2, -4)),
    (_pt(-2, 3), _pt(-6, 10), _pt("-11/10", "51/10")),
    (_pt(4, 4), _pt(6, 12), _pt("67/10", "32/5")),
)

DEFAULT_AXIS_INFINITY = cfg.AxisScene(
    LINE_AT_INFINITY,
    (HomPoint(0, 1, 0), HomPoint(1, 0, 0), HomPoint(1, -1, 0)),
    (_pt(0, 2), _pt(-5, 7), _pt(-5, 2)),
    (_pt(0, 4), _pt(-3, 7), _pt(-3, 4)),
)

# hexagon parameters on the unit circle, traversal order A1 B3 A2 B1 A3 B2
DEFAULT_HEXAGON_T = ("-2/3", "-5/2", "0", "1", "-1/3", "1/2")

DEFAULT_ELEMENT = tg.element(Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))

_BASE = HomPoint(-1, 0, 1)


def _circle_point(t):
    return conic_rational_point(cfg.UNIT_CONIC, _BASE, Fraction(t))


def _circle_outline(n=12):
    # the parameter runs once around the circle as t goes from -inf to inf
    ts = {Fraction(k, n) for k in range(-n, n + 1)}
    ts |= {Fraction(n, k) for k in range(-n, n + 1) if k}
    pts = [_circle_point(t) for t in sorted(ts)]
    return [_BASE] + pts + [_BASE]


# -- figures -------------------------------------------------------------

def _central_scene_points(d, scene):
    d.point("S", scene.S, COLORS["axis"])
    for i in range(3):
        d.point(f"A{i + 1}", scene.A[i], COLORS["A"])
    for i in range(3):
        d.point(f"B{i + 1}", scene.B[i], COLORS["B"])


def fig1_desargues(d, scene=None):
    scene = DEFAULT_CENTRAL if scene is None else cfg.CentralScene.from_json(scene)
    d.title = "Desargues configuration and its generalization"
    _central_scene_points(d, scene)
    d.polygon(("A1", "A2", "A3"), COLORS["A"])
    d.polygon(("B1", "B2", "B3"), COLORS["B"])
    con = cfg.main_construction_central(scene)
    for label, p in con.points().items():
        color = COLORS["C"] if label[0] == "C" else COLORS["axis"] if label[0] == "S" else "#555555"
        d.point(label, p, color, fit=label[0] != "S")
    for i in range(3):
        d.line_through(f"l{i + 1}", "S", f"A{i + 1}", COLORS["aux"], check=(f"B{i + 1}", f"C{i + 1}"))
    # the line P_ab P_ba carries both C_a and C_b
    for a, b in ((0, 1), (0, 2), (1, 2)):
        d.line_through(None, f"P{a + 1}{b + 1}", f"P{b + 1}{a + 1}", COLORS["C"], dashed=True,
                       check=(f"C{a + 1}", f"C{b + 1}"))
    d.line_through("s", "S1", "S2", COLORS["axis"], check=("S3",))
    return d


def _axis_figure(d, scene, title):
    d.title = title
    for i in range(3):
        d.point(f"L{i + 1}", scene.L[i], COLORS["axis"])
    for i in range(3):
        d.point(f"A{i + 1}", scene.A[i], COLORS["A"])
    for i in range(3):
        d.point(f"B{i + 1}", scene.B[i], COLORS["B"])
    d.line("s", scene.s, COLORS["axis"])
    d.require(scene.s, ("L1", "L2", "L3"))
    d.polygon(("A1", "A2", "A3"), COLORS["A"])
    d.polygon(("B1", "B2", "B3"), COLORS["B"])
    C = cfg.main_construction_axis(scene)
    for k in range(3):
        d.point(f"C{k + 1}", C[k], COLORS["C"])
    d.polygon(("C1", "C2", "C3"), COLORS["C"])
    for i, j, k in cfg.PERMUTATIONS:
        if i < j:
            d.line_through(None, f"A{i + 1}", f"B{j + 1}", COLORS["aux"], dashed=True,
                           check=(f"C{k + 1}",))
            d.line_through(None, f"A{j + 1}", f"B{i + 1}", COLORS["aux"], dashed=True,
                           check=(f"C{k + 1}",))
            # the sides opposite k of all three triangles pass through L_k
            for t in "ABC":
                side = cfg.join_as(d.points[f"{t}{i + 1}"][0], d.points[f"{t}{j + 1}"][0], "side")
                d.require(side, (f"L{k + 1}",))
    return d


def fig3_dual(d, scene=None):
    scene = DEFAULT_AXIS if scene is None else cfg.AxisScene.from_json(scene)
    return _axis_figure(d, scene, "Triangles perspective from a line and the third triangle")


def fig4_axis_infinity(d, scene=None):
    scene = DEFAULT_AXIS_INFINITY if scene is None else cfg.AxisScene.from_json(scene)
    return _axis_figure(d, scene, "Perspective axis at infinity: triangles with parallel sides")


def fig2_pascal(d, scene=None):
    if scene is None:
        hexagon = tuple(_circle_point(t) for t in DEFAULT_HEXAGON_T)
        d.curve(_circle_outline(), COLORS["E"])
    else:
        hexagon = tuple(HomPoint.from_json(p) for p in scene["hexagon"])
    d.title = "Pascal hexagon and the generalized center"
    names = ("A1", "B3", "A2", "B1", "A3", "B2")
    for name, p in zip(names, hexagon):
        d.point(name, p, COLORS["A"] if name[0] == "A" else COLORS["B"])
    d.polygon(names, COLORS["E"])
    A, B = cfg.hexagon_labels(hexagon)
    X = cfg.pappus_points(A, B)
    for k in range(3):
        d.point(f"X{k + 1}", X[k], COLORS["axis"])
    if cfg.pascal_line(hexagon) is None:
        raise DegenerateConstruction("Pascal line", "opposite-side meets are not collinear")
    d.line_through("p", "X1", "X2", COLORS["axis"], check=("X3",))
    Q = cfg.q_points(A, B)
    for (i, j), p in Q.items():
        d.point(f"Q{i + 1}{j + 1}", p, "#555555", fit=False)
    center = cfg.generalized_pascal_center(hexagon)
    if center is None:
        raise DegenerateConstruction("center", "the three lines are not concurrent")
    d.point("O", center, COLORS["C"])
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d.line_through(None, f"Q{i + 1}{j + 1}", f"Q{j + 1}{i + 1}", COLORS["C"], dashed=True,
                       check=("O",))
    return d


def _element_arg(scene, key="A", default=DEFAULT_ELEMENT):
    if scene is None or key not in scene:
        return default
    return tg.TriangleElement.from_json(scene[key])


def _frame_points(d, frame):
    for k, e in enumerate(frame.E):
        d.point(f"E{k + 1}", e, COLORS["E"])
    d.polygon(("E1", "E2", "E3"), COLORS["E"])


def _presum_lines(d, a, b, c):
    for i, j, k in cfg.PERMUTATIONS:
        if i < j:
            for u, v in ((i, j), (j, i)):
                p, q = d.points[f"{a}{u + 1}"][0], d.points[f"{b}{v + 1}"][0]
                if p == q:
                    continue
                d.line_through(None, f"{a}{u + 1}", f"{b}{v + 1}", COLORS["aux"], dashed=True,
                               check=(f"{c}{k + 1}",))


def fig5_boxplus_zero(d, scene=None):
    frame = tg.DEFAULT_FRAME
    x = _element_arg(scene)
    if not x.is_geometric:
        raise DegenerateConstruction("A", "the zero-triangle figure needs a geometric A")
    d.title = "Adding a triangle to the zero pseudo-triangle"
    _frame_points(d, frame)
    A = tg.realize(x, frame)
    Z = tg.realize(tg.ZERO, frame)
    for k in range(3):
        d.point(f"A{k + 1}", A[k], COLORS["A"])
    for k in range(3):
        d.point(f"Z{k + 1}", Z[k], COLORS["B"])
    C = tg.axis_presum_points(A, Z, frame)
    G = tg.centroid(A)
    expected = tuple(tg.reflect_point(v, G) for v in A)
    if C != expected:
        raise FigureError("pre-sum with zero is not the central reflection")
    d.point("G", G, COLORS["axis"])
    for k in range(3):
        d.point(f"C{k + 1}", C[k], COLORS["C"])
        d.line_through(None, f"A{k + 1}", f"C{k + 1}", COLORS["axis"], dashed=True, check=("G",))
    d.polygon(("A1", "A2", "A3"), COLORS["A"])
    d.polygon(("C1", "C2", "C3"), COLORS["C"])
    _presum_lines(d, "A", "Z", "C")
    return d


def fig6_degenerate(d, scene=None):
    """Triangles symmetric about a general point: the pre-sum is a pseudo-triangle."""
    frame = tg.DEFAULT_FRAME
    x = _element_arg(scene)
    A = tg.realize(x, frame)
    O = _pt(Fraction(1), Fraction(3, 4)) if scene is None or "O" not in scene else \
        HomPoint.from_json(scene["O"])
    B = tuple(tg.reflect_point(v, O) for v in A)
    d.title = "Triangles symmetric about a point: the pre-sum is a pseudo-triangle"
    _frame_points(d, frame)
    for k in range(3):
        d.point(f"A{k + 1}", A[k], COLORS["A"])
    for k in range(3):
        d.point(f"B{k + 1}", B[k], COLORS["B"])
    d.point("O", O, COLORS["axis"])
    d.polygon(("A1", "A2", "A3"), COLORS["A"])
    d.polygon(("B1", "B2", "B3"), COLORS["B"])
    C = tg.axis_presum_points(A, B, frame)
    for k in range(3):
        d.point(f"C{k + 1}", C[k], COLORS["C"])
    _presum_lines(d, "A", "B", "C")
    y = tg.bary_from_triangle(tg.GeometricTriangle(B, frame))
    if tg.element_from_points(C, frame) != tg.presum_coords(x, y):
        raise FigureError("pre-sum directions disagree with coordinates")
    return d


def fig7_a_boxplus_a(d, scene=None):
    frame = tg.DEFAULT_FRAME
    x = _element_arg(scene)
    if not x.is_geometric:
        raise DegenerateConstruction("A", "adding a triangle to itself needs a geometric A")
    d.title = "Adding a triangle to itself: the medial triangle"
    _frame_points(d, frame)
    A = tg.realize(x, frame)
    for k in range(3):
        d.point(f"A{k + 1}", A[k], COLORS["A"])
    d.polygon(("A1", "A2", "A3"), COLORS["A"])
    C = tg.medial_vertices(A)
    for k in range(3):
        d.point(f"C{k + 1}", C[k], COLORS["C"])
    d.polygon(("C1", "C2", "C3"), COLORS["C"])
    for i, j, k in cfg.PERMUTATIONS:
        if i < j:
            d.line_through(None, f"A{i + 1}", f"A{j + 1}", COLORS["aux"], check=(f"C{k + 1}",))
    if tg.presum_geometric(x, x, frame) != tg.presum_coords(x, x):
        raise FigureError("medial triangle disagrees with coordinates")
    return d


FIGURES = {
    "fig1_desargues": fig1_desargues,
    "fig2_pascal": fig2_pascal,
    "fig3_dual": fig3_dual,
    "fig4_axis_infinity": fig4_axis_infinity,
    "fig5_boxplus_zero": fig5_boxplus_zero,
    "fig6_degenerate": fig6_degenerate,
    "fig7_a_boxplus_a": fig7_a_boxplus_a,
}


@dataclass(frozen=True)
class FigureSpec:
    figure: str
    scene: dict = None
    out: str = None

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"unknown figure {self.figure!r}")


@dataclass(frozen=True)
class FigureResult:
    svg: str
    warning: str = None

    @property
    def ok(self):
        return self.warning is None


def emit_figure(spec):
    """Build and render a figure.  A degenerate scene still yields an SVG,
    drawn up to the failing step with a warning; check ``result.ok``."""
    d = Drawing(spec.figure)
    try:
        FIGURES[spec.figure](d, spec.scene)
    except DegenerateConstruction as exc:
        d.warning = str(exc)
        # drop claims about elements that were never built
        d.incidences = [(lab, l) for lab, l in d.incidences if lab in d.points]
    return FigureResult(d.render(), d.warning)
