"""Clock diagrams for a scale, as 80-column text or SVG."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .errors import LabanError
from .scale import COSET_NAMES, N, Scale, TraceForm, coset_family, direction_at_position

SHOW_ITEMS = ("labels", "cosets", "diameters", "path")
FORMATS = ("ascii", "svg")


class RenderSpecError(LabanError):
    pass


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    show: frozenset[str] = frozenset({"labels", "path"})
    output: str | None = None


def parse_render_spec(text: str, output: str | None = None) -> RenderSpec:
    """``ascii`` or ``svg``, optionally followed by ``:item,item``."""
    fmt, _, items = text.partition(":")
    fmt = fmt.strip()
    if fmt not in FORMATS:
        raise RenderSpecError(f"render format must be ascii or svg, got {fmt!r}")
    show = frozenset(i.strip() for i in items.split(",") if i.strip()) if items else RenderSpec.show
    unknown = show - set(SHOW_ITEMS)
    if unknown:
        raise RenderSpecError(f"unknown render items: {', '.join(sorted(unknown))}")
    return RenderSpec(fmt, show, output)


def _angle(pos: int) -> float:
    # 0 at twelve o'clock, clockwise
    return math.radians(30 * pos)


def render_ascii(scale: Scale, spec: RenderSpec, form: TraceForm | None = None, step: int = 4) -> str:
    width, height = 61, 21
    cx, cy = width // 2, height // 2
    rx, ry = 24, 9
    grid = [[" "] * width for _ in range(height)]

    def put(x, y, text):
        x = max(0, min(width - len(text), x))
        for i, ch in enumerate(text):
            grid[y][x + i] = ch

    # spokes
    for p in range(N):
        a = _angle(p)
        for t in range(3, 8):
            x = round(cx + rx * math.sin(a) * t / 9)
            y = round(cy - ry * math.cos(a) * t / 9)
            grid[y][x] = "."
    grid[cy][cx] = "+"
    for p in range(N):
        a = _angle(p)
        x = round(cx + rx * math.sin(a))
        y = round(cy - ry * math.cos(a))
        label = str(p)
        if "labels" in spec.show:
            label = f"{p}:{direction_at_position(scale, p).token}"
        put(x - len(label) // 2, y, label)

    lines = [f"scale {scale.name}"]
    lines += ["".join(row).rstrip() for row in grid]
    if "diameters" in spec.show:
        lines.append("diameters: " + "  ".join(
            f"{a}-{b}" for a, b in (sorted(c) for c in coset_family(6))))
    if "cosets" in spec.show:
        lines.append(f"{COSET_NAMES.get(step, f'cosets of {step}Z12')}:")
        for c in coset_family(step):
            lines.append("  {" + " ".join(str(p) for p in sorted(c)) + "}  "
                         + " ".join(direction_at_position(scale, p).token for p in sorted(c)))
    if "path" in spec.show and form is not None:
        lines.append(f"form {form.name}: " + " -> ".join(str(p) for p in form.path))
        lines.append("  " + " ".join(direction_at_position(scale, p).token for p in form.path))
    return "\n".join(_wrap(l) for l in lines) + "\n"


def _wrap(line: str, width: int = 80) -> str:
    if len(line) <= width:
        return line
    out, cur = [], ""
    for word in line.split(" "):
        if cur and len(cur) + 1 + len(word) > width:
            out.append(cur)
            cur = "    " + word
        else:
            cur = f"{cur} {word}" if cur else word
    out.append(cur)
    return "\n".join(out)


def _xy(pos: int, r: float, c: float) -> tuple[str, str]:
    a = _angle(pos)
    return f"{c + r * math.sin(a):.3f}", f"{c - r * math.cos(a):.3f}"


def render_svg(scale: Scale, spec: RenderSpec, form: TraceForm | None = None, step: int = 4) -> str:
    size, c, r = 400, 200.0, 150.0
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(size), "height": str(size),
        "viewBox": f"0 0 {size} {size}",
    })
    ET.SubElement(svg, "title").text = f"scale {scale.name}" + (f", form {form.name}" if form else "")
    ET.SubElement(svg, "circle", {"class": "clock-face", "cx": f"{c:.3f}", "cy": f"{c:.3f}",
                                  "r": f"{r:.3f}", "fill": "none", "stroke": "#999"})
    if "diameters" in spec.show:
        g = ET.SubElement(svg, "g", {"class": "diameters", "stroke": "#c44", "stroke-dasharray": "4 3"})
        for a, b in (sorted(d) for d in coset_family(6)):
            (x1, y1), (x2, y2) = _xy(a, r, c), _xy(b, r, c)
            ET.SubElement(g, "line", {"class": "diameter", "x1": x1, "y1": y1, "x2": x2, "y2": y2})
    if "cosets" in spec.show:
        g = ET.SubElement(svg, "g", {"class": "cosets", "fill": "none", "stroke": "#48c"})
        for coset in coset_family(step):
            pts = " ".join(",".join(_xy(p, r, c)) for p in sorted(coset))
            ET.SubElement(g, "polygon", {"class": "coset", "points": pts})
    if "path" in spec.show and form is not None:
        pts = " ".join(",".join(_xy(p, r, c)) for p in form.path)
        ET.SubElement(svg, "polyline", {"class": "trace-form", "points": pts, "fill": "none",
                                        "stroke": "#222", "stroke-width": "2"})
    nodes = ET.SubElement(svg, "g", {"class": "nodes"})
    for p in range(N):
        x, y = _xy(p, r, c)
        ET.SubElement(nodes, "circle", {"class": "clock-node", "cx": x, "cy": y, "r": "6",
                                        "fill": "#fff", "stroke": "#222"})
        label = str(p)
        if "labels" in spec.show:
            label = f"{p} {direction_at_position(scale, p).token}"
        lx, ly = _xy(p, r + 24, c)
        ET.SubElement(nodes, "text", {"x": lx, "y": ly, "text-anchor": "middle",
                                      "dominant-baseline": "middle", "font-size": "12"}).text = label
    return ET.tostring(svg, encoding="unicode") + "\n"


def render(scale: Scale, spec: RenderSpec, form: TraceForm | None = None, step: int = 4) -> str:
    if spec.format == "svg":
        return render_svg(scale, spec, form, step)
    return render_ascii(scale, spec, form, step)
