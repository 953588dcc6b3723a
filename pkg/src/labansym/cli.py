"""Command-line front end.

Exit status: 0 on success, 1 for usage errors, 2 for parse or domain errors.
Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
import warnings
from pathlib import Path

from . import devices as dv
from . import permgroup as pg
from . import polyhedra as ph
from .errors import LabanError, ParseError
from .notation import parse_device_expr, parse_script, parse_sequence, run_script, serialize_sequence
from .render import parse_render_spec, render
from .devices import CLOCK
from .scale import (
    DEFAULT_SCALE,
    TraceForm,
    apply_device_on_clock,
    load_config,
    position_of,
)

EXIT_USAGE = 1
EXIT_DOMAIN = 2

LIMB_TITLES = {
    "left-arm": "Left Arm",
    "right-arm": "Right Arm",
    "left-leg": "Left Leg",
    "right-leg": "Right Leg",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _vertex_set(p: ph.Polyhedron, text: str) -> list[int]:
    """``v5``, ``5``, ``UP`` or comma-separated lists of those, braces optional."""
    body = text.strip().strip("{}")
    out = []
    for part in filter(None, (x.strip() for x in body.replace(" ", ",").split(","))):
        num = part[1:] if part[:1] in "vV" and part[1:].isdigit() else part
        if num.isdigit():
            v = int(num) - 1
            if not 0 <= v < p.n:
                raise LabanError(f"vertex {part} is outside v1..v{p.n}")
        else:
            d = ph.direction(part)
            if d.solid != p.kind:
                raise LabanError(f"{part} is a direction on the {d.solid}, not the {p.kind}")
            v = d.vertex
        out.append(v)
    if not out:
        raise LabanError(f"empty vertex set {text!r}")
    return out


def cmd_info(args) -> int:
    p = ph.build(args.solid)
    if args.json:
        print(p.to_json())
        return 0
    print(f"{p.kind}: {p.n} vertices, {len(p.edges)} edges")
    print(f"{'vertex':<7}{'token':<7}{'direction':<23}{'coords':<28}{'opposite':<9}neighbours")
    for i, d in enumerate(p.directions):
        coords = "(" + ", ".join(f"{c:+.4f}" for c in p.coords[i]) + ")"
        nb = " ".join(ph.vname(u) for u in sorted(ph.neighbors(p, i)))
        print(f"{ph.vname(i):<7}{d.token:<7}{d.name:<23}{coords:<28}{ph.vname(ph.antipode(p, i)):<9}{nb}")
    return 0


def _fmt_block(b) -> str:
    return "(" + " ".join(ph.vname(v) for v in sorted(b)) + ")"


def cmd_orbits(args) -> int:
    p = ph.build(args.solid)
    g = ph.rotation_group(p) if args.group == "rot" else ph.full_symmetry_group(p)
    label = "rotation group" if args.group == "rot" else "full symmetry group"
    lines = [f"{p.kind} {label}, order {g.order}"]
    if args.stab_plane:
        if p.kind != "icosahedron":
            raise LabanError("--stab-plane needs the icosahedron")
        plane = ph.body_plane(args.stab_plane)
        g = pg.pointwise_set_stabilizer(g, plane.fixed_vertices)
        verts = ",".join(ph.vname(v) for v in sorted(plane.fixed_vertices))
        lines.append(f"pointwise stabilizer of the {plane.name} plane {{{verts}}}, order {g.order}")
    elif args.stab:
        vs = _vertex_set(p, args.stab)
        names = ",".join(ph.vname(v) for v in vs)
        if len(vs) == 1:
            g = pg.point_stabilizer(g, vs[0])
            lines.append(f"stabilizer of {names}, order {g.order}")
        elif args.pointwise:
            g = pg.pointwise_set_stabilizer(g, vs)
            lines.append(f"pointwise stabilizer of {{{names}}}, order {g.order}")
        else:
            g = pg.setwise_stabilizer(g, vs)
            lines.append(f"setwise stabilizer of {{{names}}}, order {g.order}")
    part = pg.orbit_partition(g)
    moving = part.nontrivial()
    lines.append("orbits: " + ("".join(_fmt_block(b) for b in moving) if moving else "none"))
    fixed = part.fixed()
    lines.append("fixed: " + (" ".join(ph.vname(v) for v in fixed) if fixed else "none"))
    print("\n".join(lines))
    return 0


def cmd_invert(args) -> int:
    seq = parse_sequence(args.tokens)
    config = load_config(args.config) if (args.config or args.scale) else None
    scale = config.scale(args.scale or DEFAULT_SCALE) if config else None
    device = parse_device_expr(args.expr, solid=seq.solid, scale=scale)
    if device.solid == CLOCK:
        if seq.solid != "icosahedron":
            raise LabanError("transpositions act on icosahedral sequences only")
        if scale is None:
            scale = load_config(args.config).scale(args.scale or DEFAULT_SCALE)
        form = TraceForm("input", tuple(position_of(scale, d.vertex) for d in seq))
        moved = apply_device_on_clock(scale, device, form)
        ico = ph.build("icosahedron")
        out = dv.MovementSequence(tuple(ico.directions[scale.positions[q]] for q in moved.path))
        fixed = [i for i, (a, b) in enumerate(zip(seq, out)) if a == b]
    else:
        out = dv.apply_sequence(device, seq)
        fixed = dv.fixed_steps(device, seq)
    print(serialize_sequence(out))
    if args.explain:
        print(f"device: {' then '.join(device.trail)} on the {device.solid}"
              + (f" via scale {scale.name}" if device.solid == CLOCK else ""))
        if device.solid != CLOCK:
            print(f"permutation: {pg.format_cycles(device.perm)}")
        for i, (a, b) in enumerate(zip(seq, out)):
            flag = "  (fixed: no inversion of this kind)" if i in fixed else ""
            print(f"  {i + 1}: {a.token} -> {b.token}{flag}")
    return 0


def cmd_zones(args) -> int:
    ico = ph.build("icosahedron")
    print(f"{'Limb':<11}{'Standard':<10}Normal range")
    for limb, title in LIMB_TITLES.items():
        z = dv.normal_zone(ico, limb)
        print(f"{title:<11}{z.standard.token:<10}{' '.join(d.token for d in z.cycle)}")
    if args.vertices:
        print()
        for limb, title in LIMB_TITLES.items():
            z = dv.normal_zone(ico, limb)
            print(f"{title:<11}{ph.vname(z.standard.vertex):<10}"
                  f"{' '.join(ph.vname(d.vertex) for d in z.cycle)}")
    return 0


def cmd_clock(args) -> int:
    config = load_config(args.config)
    scale_name = args.scale
    form = None
    if args.form:
        form = config.form(args.form)
        scale_name = scale_name or form.scale
    scale = config.scale(scale_name or DEFAULT_SCALE)
    if args.apply:
        if form is None:
            raise LabanError("--apply needs --form")
        device = parse_device_expr(args.apply, scale=scale)
        form = apply_device_on_clock(scale, device, form)
        form = TraceForm(f"{args.apply}({args.form})", form.path, scale.name)
    spec = parse_render_spec(args.render, args.output)
    text = render(scale, spec, form, step=args.step)
    if spec.output:
        Path(spec.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    from .checks import run_all

    start = time.perf_counter()
    results = run_all()
    failed = 0
    for c, ok, detail in results:
        failed += not ok
        line = f"{'PASS' if ok else 'FAIL'}  [{c.module}] {c.key}: {c.description}"
        print(line)
        if not ok or args.verbose:
            print(f"      got: {detail}")
    elapsed = time.perf_counter() - start
    print(f"{len(results) - failed}/{len(results)} worked examples pass ({elapsed:.2f}s)")
    return 0 if failed == 0 else EXIT_DOMAIN


def cmd_run(args) -> int:
    try:
        text = Path(args.script).read_text(encoding="utf-8")
    except OSError as exc:
        raise LabanError(f"cannot read {args.script}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ParseError("script is not valid UTF-8", line=1, col=1) from None
    result = run_script(parse_script(text), load_config(args.config))
    for line in result.lines:
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="labansym", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="scale/trace-form JSON (default: bundled)")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("info", help="vertex, direction and adjacency tables")
    p.add_argument("solid", choices=ph.SOLIDS)
    p.add_argument("--json", action="store_true", help="export vertices and edges as JSON")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("orbits", help="orbit partition under a symmetry group or a stabilizer")
    p.add_argument("solid", choices=ph.SOLIDS)
    p.add_argument("--group", choices=("rot", "full"), default="rot")
    p.add_argument("--stab", metavar="V|SET", help="vertex or set, e.g. v5 or v1,v2")
    p.add_argument("--pointwise", action="store_true", help="fix each member of --stab")
    p.add_argument("--stab-plane", choices=sorted(ph.BODY_PLANES), help="fix a body plane pointwise")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("invert", help="apply a device expression to a direction sequence")
    p.add_argument("expr", help="e.g. fb, fb.lr, octa, diam, T3")
    p.add_argument("tokens", help='direction tokens, e.g. "MRF MLB"')
    p.add_argument("--scale", help="scale used for transpositions (default: default)")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("zones", help="normal-zone table for the four limbs")
    p.add_argument("--vertices", action="store_true", help="also print vertex numbers")
    p.set_defaults(func=cmd_zones)

    p = sub.add_parser("clock", help="draw a scale clock")
    p.add_argument("--scale")
    p.add_argument("--form")
    p.add_argument("--apply", metavar="EXPR", help="transform the form first")
    p.add_argument("--render", default="ascii:labels,path", metavar="SPEC",
                   help="ascii|svg[:labels,cosets,diameters,path]")
    p.add_argument("--step", type=int, choices=(3, 4, 6), default=4, help="coset family to draw")
    p.add_argument("--output", help="write the diagram here instead of stdout")
    p.set_defaults(func=cmd_clock)

    p = sub.add_parser("check", help="run the built-in worked examples")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("run", help="execute a notation script")
    p.add_argument("script")
    p.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            code = args.func(args)
        except LabanError as exc:
            print(f"labansym: {exc}", file=sys.stderr)
            code = EXIT_DOMAIN
    for w in caught:
        print(f"labansym: warning: {w.message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
