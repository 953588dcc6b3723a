import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from labansym import devices as dv
from labansym import permgroup as pg
from labansym import polyhedra as ph
from labansym.errors import (
    EmptySequenceError,
    SolidMismatchError,
    UnknownLimbError,
    UnsupportedSolidError,
)

ICO_TOKENS = [d.token for d in ph.build("icosahedron").directions]
INVERSIONS = ["fb", "lh", "lr"]


def seq(*tokens):
    return dv.MovementSequence.of(*tokens)


def all_involutions():
    return [dv.inversion(n) for n in INVERSIONS] + [
        dv.antipodal_device("octahedron"),
        dv.antipodal_device("icosahedron"),
        dv.antipodal_device("cube"),
    ]


@pytest.mark.parametrize("plane,cycles", [
    ("vertical", [[0, 1], [4, 6], [5, 7], [8, 9]]),
    ("horizontal", [[0, 8], [1, 9], [2, 10], [3, 11]]),
    ("sagittal", [[2, 3], [4, 5], [6, 7], [10, 11]]),
])
def test_inversion_from_plane(ico, plane, cycles):
    d = dv.inversion_from_plane(ico, ph.body_plane(plane))
    assert d.perm == pg.from_cycles(cycles, 12)
    assert d.perm.fixed_points() == ph.BODY_PLANES[plane]


def test_inversion_needs_icosahedron(octa):
    with pytest.raises(UnsupportedSolidError):
        dv.inversion_from_plane(octa, "sagittal")


def test_apply_examples():
    assert dv.apply(dv.inversion("fb"), ph.direction("MRF")).token == "MRB"
    assert dv.apply(dv.inversion("lh"), ph.direction("HR")).token == "LR"
    assert dv.apply(dv.inversion("fb"), ph.direction("HR")).token == "HR"


def test_apply_solid_mismatch():
    with pytest.raises(SolidMismatchError):
        dv.apply(dv.inversion("fb"), ph.direction("UP"))


@pytest.mark.parametrize("token,want", [("BACK", "FWD"), ("UP", "DOWN"), ("RIGHT", "LEFT"), ("LEFT", "RIGHT")])
def test_invert_octahedral(token, want):
    assert dv.invert_octahedral(ph.direction(token)).token == want


def test_octahedral_inversion_agrees_with_orbit_construction():
    for d in ph.build("octahedron").directions:
        assert dv.invert_octahedral(d) == dv.octahedral_axis_inversion(d)


def test_invert_octahedral_rejects_other_solids():
    with pytest.raises(SolidMismatchError):
        dv.invert_octahedral(ph.direction("FH"))


def test_oplus_examples():
    fb = dv.inversion("fb")
    a, b = seq("MRF"), seq("MLB")
    assert dv.oplus(a, b).token == "MLB"
    assert dv.oplus(dv.apply_sequence(fb, a), dv.apply_sequence(fb, b)).token == "MLF"
    x = seq("FH", "BL")
    assert dv.oplus(x, x).token == "BL"


def test_oplus_empty():
    with pytest.raises(EmptySequenceError):
        dv.oplus(dv.MovementSequence(()), seq("FH"))


def test_oplus_mixed_solids():
    with pytest.raises(SolidMismatchError):
        dv.oplus(seq("UP"), seq("FH"))


def test_sequence_must_share_solid():
    with pytest.raises(SolidMismatchError):
        seq("UP", "FH")


def test_apply_sequence_examples():
    assert str(dv.apply_sequence(dv.inversion("fb"), seq("MRF", "MLB"))) == "MRB MLF"
    s = seq("FH", "HR", "LL")
    assert dv.apply_sequence(dv.identity_device("icosahedron"), s) == s
    lh_lr_fb = dv.chain([dv.inversion("fb"), dv.inversion("lr"), dv.inversion("lh")])
    assert str(dv.apply_sequence(lh_lr_fb, seq("FH"))) == "BL"


def test_apply_sequence_mismatch():
    with pytest.raises(SolidMismatchError):
        dv.apply_sequence(dv.inversion("fb"), seq("UP"))


def test_compose_devices():
    fb, lr, lh = (dv.inversion(n) for n in ("fb", "lr", "lh"))
    d = dv.compose_devices(fb, lr)
    assert d.name == "composite" and d.trail == ("fb", "lr")
    assert dv.apply(d, ph.direction("MRF")).token == "MLB"
    assert dv.compose_devices(fb, fb).is_identity()
    assert dv.chain([fb, lr, lh]).perm == ph.build("icosahedron").antipode_map


def test_compose_devices_keeps_trail():
    t3, t5 = dv.transposition(3), dv.transposition(5)
    d = dv.compose_devices(t3, t5)
    assert d.perm == dv.transposition(8).perm and d.trail == ("T3", "T5")


def test_compose_devices_mismatch():
    with pytest.raises(SolidMismatchError):
        dv.compose_devices(dv.inversion("fb"), dv.antipodal_device("octahedron"))


def test_fixed_steps_flags_plane_vertices():
    assert dv.fixed_steps(dv.inversion("fb"), seq("MRF", "HR", "LL")) == [1, 2]


@pytest.mark.parametrize("d", all_involutions(), ids=lambda d: f"{d.name}-{d.solid}")
def test_involution(d):
    for x in ph.build(d.solid).directions:
        assert dv.apply(d, dv.apply(d, x)) == x


@pytest.mark.parametrize("d", all_involutions(), ids=lambda d: f"{d.name}-{d.solid}")
def test_devices_are_symmetries(d):
    assert d.perm in ph.full_symmetry_group(ph.build(d.solid))


def test_inversions_commute_and_multiply_to_antipode(ico):
    perms = {n: dv.inversion(n).perm for n in INVERSIONS}
    for a, b in itertools.combinations(INVERSIONS, 2):
        assert pg.compose(perms[a], perms[b]) == pg.compose(perms[b], perms[a])
    for order in itertools.permutations(INVERSIONS):
        d = dv.chain([dv.inversion(n) for n in order])
        assert d.perm == ico.antipode_map


icosahedral_sequences = st.lists(st.sampled_from(ICO_TOKENS), min_size=1, max_size=4).map(lambda t: seq(*t))


@given(icosahedral_sequences, icosahedral_sequences, st.sampled_from(INVERSIONS + ["diam"]))
def test_homomorphism_over_oplus(a, b, name):
    d = dv.antipodal_device() if name == "diam" else dv.inversion(name)
    assert dv.apply(d, dv.oplus(a, b)) == dv.oplus(dv.apply_sequence(d, a), dv.apply_sequence(d, b))


@pytest.mark.parametrize("limb,std,rng", [
    ("left-arm", 3, {0, 1, 7, 11, 5}),
    ("right-arm", 2, {0, 1, 6, 10, 4}),
    ("left-leg", 11, {5, 3, 7, 9, 8}),
    ("right-leg", 10, {4, 2, 6, 9, 8}),
])
def test_normal_zone_table(ico, limb, std, rng):
    z = dv.normal_zone(ico, limb)
    assert z.standard.vertex == std
    assert {d.vertex for d in z.range} == rng
    assert set(z.cycle) == z.range and len(z.cycle) == 5


def test_normal_zone_is_orbit_under_true_stabilizer(ico):
    rot = ph.rotation_group(ico)
    for limb in dv.LIMBS:
        z = dv.normal_zone(ico, limb)
        stab = pg.point_stabilizer(rot, z.standard.vertex)
        assert stab.order == 5
        for nb in ph.neighbors(ico, z.standard.vertex):
            assert pg.orbit(stab, nb) == ph.neighbors(ico, z.standard.vertex)


def test_left_arm_display_order(ico):
    assert " ".join(d.token for d in dv.normal_zone(ico, "left-arm").cycle) == "FH BH MLB LL MLF"


def test_unknown_limb(ico):
    with pytest.raises(UnknownLimbError):
        dv.normal_zone(ico, "tail")


def test_transposition_wraps():
    assert dv.transposition(12).perm.is_identity()
    assert dv.transposition(-1).perm == dv.transposition(11).perm


def test_random_sequences_keep_length():
    rng = random.Random(7)
    for _ in range(50):
        s = seq(*rng.choices(ICO_TOKENS, k=rng.randint(1, 8)))
        for n in INVERSIONS:
            assert len(dv.apply_sequence(dv.inversion(n), s)) == len(s)
