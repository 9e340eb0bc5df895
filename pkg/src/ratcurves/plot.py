"""ASCII and SVG pictures of the (a, e) lattice for one (g, k).

ASCII cells: ``.`` admissible pair, ``#`` component, ``N`` nice,
``A`` almost nice, ``*`` nice and almost nice at once.  The e axis points up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .classifier import ALMOST_NICE, NICE, Inventory, classify
from .lattice import PairAE, Params, enumerate_range, validate_params
from .oracle import BoundaryCurves

FORMATS = ("ascii", "svg")

CELL = 40
MARGIN = 50
RADIUS = 5


@dataclass(frozen=True)
class PlotSpec:
    params: Params
    format: str
    a_min: int
    a_max: int
    e_min: int
    e_max: int

    @classmethod
    def for_params(cls, g, k, format="ascii"):
        if format not in FORMATS:
            raise ValueError(f"unknown plot format {format!r}; expected one of {FORMATS}")
        params = validate_params(g, k)
        top = max(p.e for p in enumerate_range(k))
        return cls(params, format, (k + 1) // 2, k + 1, 0, top + 1)


def _markers(inventory: Inventory) -> dict[PairAE, str]:
    kinds = {}
    for p in enumerate_range(inventory.k):
        kinds[p] = "range"
    for rec in inventory.components:
        if rec.pair is None:
            continue
        nice, almost = NICE in rec.labels, ALMOST_NICE in rec.labels
        if nice and almost:
            kinds[rec.pair] = "both"
        elif nice:
            kinds[rec.pair] = "nice"
        elif almost:
            kinds[rec.pair] = "almost_nice"
        else:
            kinds[rec.pair] = "component"
    return kinds


ASCII_CHARS = {"range": ".", "component": "#", "nice": "N", "almost_nice": "A", "both": "*"}


def render_ascii(spec: PlotSpec, inventory: Inventory) -> str:
    markers = _markers(inventory)
    g, k = spec.params.g, spec.params.k
    width = len(str(spec.e_max))
    lines = [f"g={g} k={k}: a from {spec.a_min} to {spec.a_max} (left to right), e upward"]
    for e in range(spec.e_max, spec.e_min - 1, -1):
        cells = "".join(
            ASCII_CHARS.get(markers.get(PairAE(a, e)), " ")
            for a in range(spec.a_min, spec.a_max + 1)
        )
        lines.append(f"{e:>{width}} |{cells}".rstrip())
    lines.append(" " * width + " +" + "-" * (spec.a_max - spec.a_min + 1))
    lines.append("legend: . range  # component  N nice  A almost nice  * nice and almost nice")
    return "\n".join(lines) + "\n"


def _fmt(q) -> str:
    return f"{float(q):.3f}"


def _half_steps(lo, hi):
    a = Fraction(lo)
    while a <= hi:
        yield a
        a += Fraction(1, 2)


def _curve_samples(spec: PlotSpec, curves: BoundaryCurves):
    """Exact samples of A and B at half-integer a, restricted to the viewport."""
    k = spec.params.k
    lo_e, hi_e = spec.e_min - Fraction(1, 2), spec.e_max + Fraction(1, 2)

    def keep(pts):
        return [(a, e) for a, e in pts if e is not None and lo_e <= e <= hi_e]

    a_pts = keep((a, curves.curve_a(a)) for a in _half_steps(spec.a_min, spec.a_max))
    # only the branch 2a >= k+3 bounds the region
    b_lo = max(Fraction(spec.a_min), Fraction(k + 3, 2))
    b_pts = keep((a, curves.curve_b(a)) for a in _half_steps(b_lo, spec.a_max))
    return a_pts, b_pts


def render_svg(spec: PlotSpec, inventory: Inventory) -> str:
    g, k = spec.params.g, spec.params.k
    cols = spec.a_max - spec.a_min
    rows = spec.e_max - spec.e_min
    width = 2 * MARGIN + cols * CELL
    height = 2 * MARGIN + rows * CELL

    def x(a):
        return MARGIN + (Fraction(a) - spec.a_min) * CELL

    def y(e):
        return MARGIN + (spec.e_max - Fraction(e)) * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        "<style>"
        ".point{fill:#ffffff;stroke:#555555;stroke-width:1}"
        ".component{fill:#333333}"
        ".nice{fill:#1f77b4}"
        ".almost-nice{fill:#d62728}"
        ".curve-a{fill:none;stroke:#2ca02c;stroke-width:1.5}"
        ".curve-b{fill:none;stroke:#9467bd;stroke-width:1.5;stroke-dasharray:4 3}"
        ".axis{stroke:#000000;stroke-width:1}"
        "text{font-family:sans-serif;font-size:12px}"
        "</style>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{MARGIN}" y="{MARGIN // 2}">{escape(f"g={g}, k={k}")}</text>',
        f'<polyline class="axis" points="{_fmt(x(spec.a_min))},{_fmt(y(spec.e_max))} '
        f'{_fmt(x(spec.a_min))},{_fmt(y(0))} {_fmt(x(spec.a_max))},{_fmt(y(0))}"/>',
        f'<text x="{_fmt(x(spec.a_max) + 8)}" y="{_fmt(y(0) + 4)}">a</text>',
        f'<text x="{_fmt(x(spec.a_min) - 4)}" y="{MARGIN - 10}">e</text>',
    ]
    for a in range(spec.a_min, spec.a_max + 1):
        out.append(f'<text x="{_fmt(x(a) - 4)}" y="{_fmt(y(0) + 18)}">{a}</text>')
    for e in range(spec.e_min, spec.e_max + 1):
        out.append(f'<text x="{_fmt(x(spec.a_min) - 30)}" y="{_fmt(y(e) + 4)}">{e}</text>')

    a_pts, b_pts = _curve_samples(spec, BoundaryCurves(g, k))
    for cls, pts in (("curve-a", a_pts), ("curve-b", b_pts)):
        if len(pts) >= 2:
            coords = " ".join(f"{_fmt(x(a))},{_fmt(y(e))}" for a, e in pts)
            out.append(f'<polyline class="{cls}" points="{coords}"/>')

    classes = {
        "range": "point",
        "component": "point component",
        "nice": "point component nice",
        "almost_nice": "point component almost-nice",
        "both": "point component nice almost-nice",
    }
    for p, kind in sorted(_markers(inventory).items()):
        out.append(
            f'<circle class="{classes[kind]}" cx="{_fmt(x(p.a))}" cy="{_fmt(y(p.e))}" '
            f'r="{RADIUS}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_region(g: int, k: int, format: str = "ascii") -> str:
    spec = PlotSpec.for_params(g, k, format)
    inventory = classify(g, k)
    if format == "svg":
        return render_svg(spec, inventory)
    return render_ascii(spec, inventory)
