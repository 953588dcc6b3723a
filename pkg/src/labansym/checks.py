"""The published worked examples as an executable regression list.

Each check returns ``(ok, detail)``; ``detail`` shows what was computed so a
failing line explains itself.  ``labansym check`` runs them all.
"""

from __future__ import annotations

import io
from contextlib import redirect_stdout
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import devices as dv
from . import permgroup as pg
from . import polyhedra as ph
from .notation import parse_device_expr, parse_sequence, serialize_sequence
from .scale import coset_family


@dataclass(frozen=True)
class Check:
    key: str
    module: str
    description: str
    run: Callable[[], tuple[bool, str]]


REGISTRY: list[Check] = []


def check(key, module, description):
    def deco(fn):
        REGISTRY.append(Check(key, module, description, fn))
        return fn
    return deco


def _blocks(p: pg.OrbitPartition) -> str:
    return " ".join("{" + ",".join(f"v{v + 1}" for v in sorted(b)) + "}" for b in p.blocks)


def _vs(vs) -> set[int]:
    """1-based vertex numbers to 0-based indices."""
    return {v - 1 for v in vs}


def _pairs(*pairs) -> set[frozenset[int]]:
    return {frozenset(_vs(p)) for p in pairs}


def _ico():
    return ph.build("icosahedron")


def _oct():
    return ph.build("octahedron")


def half_turn(kind: str, axis) -> pg.Permutation:
    """Vertex permutation of the 180° rotation about ``axis`` (from coordinates)."""
    from . import kernels

    p = ph.build(kind)
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    rot = 2 * np.outer(a, a) - np.eye(3)
    perm = kernels.match_points(p.coords @ rot.T, p.coords, 1e-6)
    return pg.Permutation(tuple(int(x) for x in perm))


def rho180_e1() -> pg.Permutation:
    """Half-turn about the axis through the midpoints of edges v1v2 and v9v10."""
    c = _ico().coords
    return half_turn("icosahedron", (c[0] + c[1]) / 2)


# ---------------------------------------------------------------- permgroup


@check("octa-stab-cycles", "permgroup", "from_cycles (v1,v2)(v3,v4) on 6 points swaps v1/v2, v3/v4, fixes v5, v6")
def _():
    p = pg.from_cycles([[0, 1], [2, 3]], 6)
    return p.mapping == (1, 0, 3, 2, 4, 5), pg.format_cycles(p)


@check("lh-cycles", "permgroup", "from_cycles (v1,v9)(v2,v10)(v3,v11)(v4,v12) is the low-high involution")
def _():
    p = pg.from_cycles([[0, 8], [1, 9], [2, 10], [3, 11]], 12)
    return p == dv.inversion("lh").perm, pg.format_cycles(p)


@check("octa-stab-order", "permgroup", "closure of (v1,v2)(v3,v4) has one non-identity element")
def _():
    g = pg.closure([pg.from_cycles([[0, 1], [2, 3]], 6)])
    return g.order == 2, f"order {g.order}"


@check("octa-orbits", "permgroup", "orb(v1) = {v1,v2}, orb(v3) = {v3,v4} under <(v1,v2)(v3,v4)>")
def _():
    g = pg.closure([pg.from_cycles([[0, 1], [2, 3]], 6)])
    o1, o3 = pg.orbit(g, 0), pg.orbit(g, 2)
    return o1 == _vs({1, 2}) and o3 == _vs({3, 4}), _blocks(pg.orbit_partition(g))


@check("lh-orbits", "permgroup", "low-high involution: pairs v1/v9, v2/v10, v3/v11, v4/v12; horizontal plane fixed")
def _():
    part = pg.orbit_partition(pg.closure([dv.inversion("lh").perm]))
    want = _pairs({1, 9}, {2, 10}, {3, 11}, {4, 12}, {5}, {6}, {7}, {8})
    return part.as_sets() == want, _blocks(part)


@check("rho180-orbits", "permgroup",
       "half-turn about the e1 axis: pairs v1/v2, v3/v4, v5/v7, v6/v8, v9/v10, v11/v12")
def _():
    part = pg.orbit_partition(pg.closure([rho180_e1()]))
    want = _pairs({1, 2}, {3, 4}, {5, 7}, {6, 8}, {9, 10}, {11, 12})
    return part.as_sets() == want, _blocks(part)


@check("octa-H", "permgroup", "stab(v5) inside <half-turn about the v5-v6 axis> = {e, (v1,v2)(v3,v4)}")
def _():
    g = pg.closure([half_turn("octahedron", _oct().coords[4])])
    h = pg.point_stabilizer(g, 4)
    want = {pg.identity(6), pg.from_cycles([[0, 1], [2, 3]], 6)}
    return set(h.elements) == want, " ".join(map(str, h.elements))


@check("lh-stabilizer", "permgroup", "pointwise stabilizer of {v5..v8} in the order-120 group = {e, lh}")
def _():
    h = pg.pointwise_set_stabilizer(ph.full_symmetry_group(_ico()), _vs({5, 6, 7, 8}))
    want = {pg.identity(12), pg.from_cycles([[0, 8], [1, 9], [2, 10], [3, 11]], 12)}
    return set(h.elements) == want, " ".join(map(str, h.elements))


@check("lr-stabilizer", "permgroup", "pointwise stabilizer of {v1,v2,v9,v10} in the order-120 group = {e, lr}")
def _():
    h = pg.pointwise_set_stabilizer(ph.full_symmetry_group(_ico()), _vs({1, 2, 9, 10}))
    want = {pg.identity(12), pg.from_cycles([[2, 3], [4, 5], [6, 7], [10, 11]], 12)}
    return set(h.elements) == want, " ".join(map(str, h.elements))


@check("edge-stabilizer", "permgroup", "stab(e1) in the rotation group is {e, half-turn about the e1 axis}")
def _():
    h = pg.setwise_stabilizer(ph.rotation_group(_ico()), _vs({1, 2}))
    return set(h.elements) == {pg.identity(12), rho180_e1()}, " ".join(map(str, h.elements))


# ---------------------------------------------------------------- polyhedra


@check("octa-build", "polyhedra", "octahedron: 6 vertices, 12 edges, v1 is the head (UP)")
def _():
    p = _oct()
    ok = p.n == 6 and len(p.edges) == 12 and p.directions[0].token == "UP" and p.coords[0][2] == 1
    return ok, f"{p.n} vertices, {len(p.edges)} edges, v1={p.directions[0].token}"


@check("zone-neighbors-v4", "polyhedra", "neighbors of v4 = {v1,v2,v8,v12,v6}")
def _():
    nb = ph.neighbors(_ico(), 3)
    return nb == _vs({1, 2, 8, 12, 6}), str(sorted(v + 1 for v in nb))


@check("zone-neighbors-v11", "polyhedra", "neighbors of v11 = {v3,v7,v10,v9,v5}")
def _():
    nb = ph.neighbors(_ico(), 10)
    return nb == _vs({3, 7, 10, 9, 5}), str(sorted(v + 1 for v in nb))


@check("octa-antipode", "polyhedra", "octahedron: I(v1) = {v2}")
def _():
    a = ph.antipode(_oct(), 0)
    return a == 1, f"v{a + 1}"


@check("ico-antipode", "polyhedra", "icosahedron: right middle front (v5) is opposite left middle back (v8)")
def _():
    a = ph.antipode(_ico(), 4)
    return a == 7, f"v{a + 1}"


@check("tokens", "polyhedra", "FH is v1 (forward high), MRB is v7 (middle right back), UP is the octahedral head")
def _():
    got = [ph.vertex_for_direction(t) for t in ("FH", "MRB", "UP")]
    return got == [("icosahedron", 0), ("icosahedron", 6), ("octahedron", 0)], str(got)


# ---------------------------------------------------------------- devices


@check("lh-device", "devices", "horizontal plane gives lh = (v1,v9)(v2,v10)(v3,v11)(v4,v12)")
def _():
    d = dv.inversion_from_plane(_ico(), "horizontal")
    return d.perm == pg.from_cycles([[0, 8], [1, 9], [2, 10], [3, 11]], 12), str(d.perm)


@check("lr-device", "devices", "sagittal plane gives lr = (v3,v4)(v5,v6)(v7,v8)(v11,v12)")
def _():
    d = dv.inversion_from_plane(_ico(), "sagittal")
    return d.perm == pg.from_cycles([[2, 3], [4, 5], [6, 7], [10, 11]], 12), str(d.perm)


@check("fb-device", "devices", "vertical plane gives fb with orbit pairs v1/v2, v5/v7, v6/v8, v9/v10")
def _():
    d = dv.inversion_from_plane(_ico(), "vertical")
    part = pg.orbit_partition(pg.closure([d.perm]))
    want = _pairs({1, 2}, {5, 7}, {6, 8}, {9, 10}, {3}, {4}, {11}, {12})
    return part.as_sets() == want, str(d.perm)


@check("apply", "devices", "I_fb(v5) = v7 and the low-high inversion of v3 is v11")
def _():
    a = dv.apply(dv.inversion("fb"), ph.direction("MRF"))
    b = dv.apply(dv.inversion("lh"), ph.direction("HR"))
    return (a.token, b.token) == ("MRB", "LR"), f"{a} {b}"


@check("octa-inversion", "devices", "octahedral inversion: BACK->FWD, UP->DOWN, RIGHT->LEFT")
def _():
    got = [dv.invert_octahedral(ph.direction(t)).token for t in ("BACK", "UP", "RIGHT")]
    return got == ["FWD", "DOWN", "LEFT"], " ".join(got)


@check("oplus", "devices", "A={v5}, B={v8}: A+B = {v8}, I_fb(A)+I_fb(B) = {v6} = I_fb(A+B)")
def _():
    fb = dv.inversion("fb")
    a, b = dv.MovementSequence.of("MRF"), dv.MovementSequence.of("MLB")
    ab = dv.oplus(a, b)
    inv = dv.oplus(dv.apply_sequence(fb, a), dv.apply_sequence(fb, b))
    ok = ab.vertex == 7 and inv.vertex == 5 and dv.apply(fb, ab) == inv
    return ok, f"A+B={ab} I(A)+I(B)={inv} I(A+B)={dv.apply(fb, ab)}"


@check("sequence", "devices", "fb applied to the sequence [v5, v8] gives [v7, v6]")
def _():
    out = dv.apply_sequence(dv.inversion("fb"), dv.MovementSequence.of("MRF", "MLB"))
    return out.vertices == (6, 5), str(out)


@check("diametral", "devices", "front-back then left-right sends right middle front to left middle back")
def _():
    d = dv.compose_devices(dv.inversion("fb"), dv.inversion("lr"))
    out = dv.apply(d, ph.direction("MRF"))
    return out.token == "MLB", str(out)


@check("zones", "devices", "normal zones: left arm v4, right arm v3, left leg v12, right leg v11 with their ranges")
def _():
    want = {
        "left-arm": (4, {1, 2, 8, 12, 6}),
        "right-arm": (3, {1, 2, 7, 11, 5}),
        "left-leg": (12, {6, 4, 8, 10, 9}),
        "right-leg": (11, {5, 3, 7, 10, 9}),
    }
    ok = True
    for limb, (std, rng) in want.items():
        z = dv.normal_zone(_ico(), limb)
        ok &= z.standard.vertex == std - 1 and {d.vertex for d in z.range} == _vs(rng)
    return ok, "4 limbs"


# ---------------------------------------------------------------- scale


@check("cosets", "scale", "quadrangles 3Z12: 3 sets of 4; diameters 6Z12: 6 sets of 2")
def _():
    q, d = coset_family(3), coset_family(6)
    ok = len(q) == 3 and all(len(c) == 4 for c in q) and len(d) == 6 and all(len(c) == 2 for c in d)
    return ok, f"{[sorted(c) for c in q]}"


# ---------------------------------------------------------------- notation


@check("parse", "notation", "'MRF MLB' parses to [v5, v8] on the icosahedron")
def _():
    s = parse_sequence("MRF MLB")
    return s.vertices == (4, 7) and s.solid == "icosahedron", str(s.vertices)


@check("serialize", "notation", "[v7, v6] serializes to 'MRB MLF' and [v1] to 'FH'")
def _():
    ico = _ico()
    a = serialize_sequence(dv.MovementSequence((ico.directions[6], ico.directions[5])))
    b = serialize_sequence(dv.MovementSequence((ico.directions[0],)))
    return (a, b) == ("MRB MLF", "FH"), f"{a!r} {b!r}"


@check("device-expr", "notation", "'fb.lr' maps v5 to v8")
def _():
    d = parse_device_expr("fb.lr")
    return d.perm.mapping[4] == 7, str(d.perm)


# ---------------------------------------------------------------- cli


def _cli(*argv) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


@check("cli-invert", "cli", "invert fb \"MRF MLB\" prints MRB MLF")
def _():
    code, out = _cli("invert", "fb", "MRF MLB")
    return code == 0 and out.strip() == "MRB MLF", out.strip()


@check("cli-zones", "cli", "zones: Left Arm standard HL, range FH BH MLB LL MLF")
def _():
    code, out = _cli("zones")
    row = next((l for l in out.splitlines() if l.startswith("Left Arm")), "")
    ok = code == 0 and row.split()[2:] == ["HL", "FH", "BH", "MLB", "LL", "MLF"]
    return ok, row


@check("cli-orbits", "cli", "orbits icosahedron --group full --stab-plane horizontal: 4 pairs, 4 fixed points")
def _():
    code, out = _cli("orbits", "icosahedron", "--group", "full", "--stab-plane", "horizontal")
    lines = out.splitlines()
    ok = code == 0 and "orbits: (v1 v9)(v2 v10)(v3 v11)(v4 v12)" in lines and "fixed: v5 v6 v7 v8" in lines
    return ok, " | ".join(lines[-2:])


def run_all() -> list[tuple[Check, bool, str]]:
    results = []
    for c in REGISTRY:
        try:
            ok, detail = c.run()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((c, bool(ok), detail))
    return results
