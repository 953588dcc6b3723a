"""Exit criteria, one marked group per criterion.

The terminal summary prints a PASS/FAIL line for each criterion number.
"""

import itertools
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from labansym import devices as dv
from labansym import permgroup as pg
from labansym import polyhedra as ph
from labansym import scale as sc
from labansym.errors import LabanError
from labansym.notation import parse_device_expr, parse_script, parse_sequence, serialize_sequence

from oracles import adjacency_automorphisms, adjacency_from_coords, orientation_preserving

acceptance = pytest.mark.acceptance


def pairs(*groups):
    """1-based vertex groups to a set of 0-based frozensets."""
    return {frozenset(v - 1 for v in g) for g in groups}


# 1 ---------------------------------------------------------------------------


@acceptance(1, "group orders match brute-force adjacency enumeration")
@pytest.mark.parametrize("kind,rot,full", [("octahedron", 24, 48), ("cube", 24, 48), ("icosahedron", 60, 120)])
def test_c1_group_orders(kind, rot, full):
    p = ph.build(kind)
    brute = adjacency_automorphisms(adjacency_from_coords(p.coords))
    brute_rot = [q for q in brute if orientation_preserving(q, p.coords)]
    assert (len(brute_rot), len(brute)) == (rot, full)
    assert ph.rotation_group(p).order == rot
    assert ph.full_symmetry_group(p).order == full
    assert {q.mapping for q in ph.full_symmetry_group(p)} == set(brute)
    assert {q.mapping for q in ph.rotation_group(p)} == set(brute_rot)


# 2 ---------------------------------------------------------------------------


@acceptance(2, "printed orbit lists reproduced exactly")
def test_c2a_octahedral_orbits():
    g = pg.closure([pg.from_cycles([[0, 1], [2, 3]], 6)])
    part = pg.orbit_partition(g).as_sets()
    assert pairs({1, 2}, {3, 4}) <= part
    assert part == pairs({1, 2}, {3, 4}, {5}, {6})


@acceptance(2, "printed orbit lists reproduced exactly")
def test_c2b_half_turn_about_top_edge():
    ico = ph.build("icosahedron")
    stab = pg.setwise_stabilizer(ph.rotation_group(ico), {0, 1})
    assert stab.order == 2
    (rho,) = stab.non_identity()
    part = pg.orbit_partition(pg.closure([rho])).as_sets()
    assert part == pairs({1, 2}, {3, 4}, {5, 7}, {6, 8}, {9, 10}, {11, 12})


@acceptance(2, "printed orbit lists reproduced exactly")
@pytest.mark.parametrize("plane,want", [
    ("horizontal", [{1, 9}, {2, 10}, {3, 11}, {4, 12}]),
    ("sagittal", [{3, 4}, {5, 6}, {7, 8}, {11, 12}]),
])
def test_c2c_plane_stabilizer_orbits(plane, want):
    ico = ph.build("icosahedron")
    h = pg.pointwise_set_stabilizer(ph.full_symmetry_group(ico), ph.BODY_PLANES[plane])
    part = pg.orbit_partition(h)
    assert set(part.nontrivial()) == pairs(*want)
    assert set(part.fixed()) == ph.BODY_PLANES[plane]


# 3 ---------------------------------------------------------------------------


@acceptance(3, "each body plane's pointwise stabilizer has order 2 with the printed involution")
@pytest.mark.parametrize("plane,cycles,kind", [
    ("horizontal", [[1, 9], [2, 10], [3, 11], [4, 12]], "printed"),
    ("sagittal", [[3, 4], [5, 6], [7, 8], [11, 12]], "printed"),
    # front-back is checked against its orbit-pair list
    ("vertical", [[1, 2], [5, 7], [6, 8], [9, 10]], "orbit list"),
])
def test_c3_order_two(plane, cycles, kind):
    ico = ph.build("icosahedron")
    full = ph.full_symmetry_group(ico)
    assert full.order == 120
    h = pg.pointwise_set_stabilizer(full, ph.BODY_PLANES[plane])
    assert h.order == 2
    want = pg.from_cycles([[a - 1 for a in c] for c in cycles], 12)
    assert h.non_identity() == [want]


# 4 ---------------------------------------------------------------------------


@acceptance(4, "device algebra: involutions, commutation, triple product is the antipode")
def test_c4_device_algebra():
    ico = ph.build("icosahedron")
    inv = {n: dv.inversion(n) for n in ("fb", "lh", "lr")}
    for d in list(inv.values()) + [dv.antipodal_device("icosahedron")]:
        for x in ico.directions:
            assert dv.apply(d, dv.apply(d, x)) == x
    for a, b in itertools.combinations(inv, 2):
        ab = dv.compose_devices(inv[a], inv[b])
        ba = dv.compose_devices(inv[b], inv[a])
        assert all(ab.perm.mapping[v] == ba.perm.mapping[v] for v in range(12))
    triple = dv.chain([inv["fb"], inv["lh"], inv["lr"]])
    assert all(triple.perm.mapping[v] == ph.antipode(ico, v) for v in range(12))


# 5 ---------------------------------------------------------------------------


@acceptance(5, "inversion is a homomorphism over the sequence operation")
def test_c5_homomorphism():
    fb = dv.inversion("fb")
    a, b = dv.MovementSequence.of("MRF"), dv.MovementSequence.of("MLB")
    assert dv.oplus(a, b).vertex == 7
    assert dv.oplus(dv.apply_sequence(fb, a), dv.apply_sequence(fb, b)).vertex == 5
    assert dv.apply(fb, dv.oplus(a, b)).vertex == 5

    rng = np.random.default_rng(2024)
    dirs = ph.build("icosahedron").directions
    devices = [dv.inversion(n) for n in ("fb", "lh", "lr")] + [dv.antipodal_device()]
    for _ in range(5000):
        la, lb = rng.integers(1, 5, size=2)
        A = dv.MovementSequence(tuple(dirs[i] for i in rng.integers(0, 12, size=la)))
        B = dv.MovementSequence(tuple(dirs[i] for i in rng.integers(0, 12, size=lb)))
        for d in devices:
            assert dv.apply(d, dv.oplus(A, B)) == dv.oplus(dv.apply_sequence(d, A), dv.apply_sequence(d, B))


# 6 ---------------------------------------------------------------------------


@acceptance(6, "normal-zone table matches and ranges are orbits under the order-5 stabilizer")
def test_c6_normal_zones():
    table = {
        "left-arm": (4, {1, 2, 8, 12, 6}),
        "right-arm": (3, {1, 2, 7, 11, 5}),
        "left-leg": (12, {6, 4, 8, 10, 9}),
        "right-leg": (11, {5, 3, 7, 10, 9}),
    }
    ico = ph.build("icosahedron")
    rot = ph.rotation_group(ico)
    for limb, (std, rng) in table.items():
        z = dv.normal_zone(ico, limb)
        assert z.standard.vertex == std - 1
        assert {d.vertex + 1 for d in z.range} == rng
        stab = pg.point_stabilizer(rot, std - 1)
        assert stab.order == 5
        for nb in ph.neighbors(ico, std - 1):
            assert {v + 1 for v in pg.orbit(stab, nb)} == rng


# 7 ---------------------------------------------------------------------------


@acceptance(7, "clock algebra: cosets, transpositions, diametral inversion, default scale")
def test_c7_clock_algebra():
    sizes = {step: sorted(len(c) for c in sc.coset_family(step)) for step in (4, 3, 6)}
    assert sizes == {4: [3] * 4, 3: [4] * 3, 6: [2] * 6}
    for step in (3, 4, 6):
        fam = sc.coset_family(step)
        assert sc.coset_cover(fam)
        for k in range(12):
            assert {frozenset((p + k) % 12 for p in c) for c in fam} == set(fam)
    for p in range(12):
        assert sc.diametral_clock(p) != p
        assert sc.diametral_clock(sc.diametral_clock(p)) == p
    ico = ph.build("icosahedron")
    s = sc.default_scale()
    for p in range(12):
        assert s.vertex_at((p + 6) % 12) == ph.antipode(ico, s.vertex_at(p))


# 8 ---------------------------------------------------------------------------


@acceptance(8, "orbit-stabilizer theorem on every vertex of every solid")
@pytest.mark.parametrize("kind", ph.SOLIDS)
def test_c8_orbit_stabilizer(kind):
    p = ph.build(kind)
    for g in (ph.rotation_group(p), ph.full_symmetry_group(p)):
        for v in range(p.n):
            assert len(pg.orbit(g, v)) * pg.point_stabilizer(g, v).order == g.order


# 9 ---------------------------------------------------------------------------


@acceptance(9, "notation round-trip and parser fuzzing")
def test_c9_round_trip():
    tokens = [d.token for d in ph.all_directions()]
    assert len(tokens) == 26
    for t in tokens:
        assert serialize_sequence(parse_sequence(t)) == t
    rng = np.random.default_rng(99)
    for _ in range(1000):
        kind = ph.SOLIDS[rng.integers(0, 3)]
        dirs = ph.build(kind).directions
        s = dv.MovementSequence(tuple(dirs[i] for i in rng.integers(0, len(dirs), size=rng.integers(1, 13))))
        assert parse_sequence(serialize_sequence(s)) == s


@acceptance(9, "notation round-trip and parser fuzzing")
def test_c9_fuzz():
    rng = np.random.default_rng(7)
    diagnostics = 0
    for _ in range(10_000):
        data = rng.integers(0, 256, size=rng.integers(0, 48), dtype=np.uint8).tobytes()
        for fn in (parse_sequence, parse_device_expr, parse_script):
            try:
                fn(data)
            except LabanError:
                diagnostics += 1
    assert diagnostics > 0


# 10 --------------------------------------------------------------------------


@acceptance(10, "`check` is green and finishes within 5 seconds")
def test_c10_check_command():
    start = time.perf_counter()
    out = subprocess.run([sys.executable, "-m", "labansym.cli", "check"],
                         capture_output=True, text=True, env=dict(os.environ))
    elapsed = time.perf_counter() - start
    failing = [l for l in out.stdout.splitlines() if l.startswith("FAIL")]
    assert elapsed < 5.0
    assert out.returncode == 0, "\n".join(failing)
