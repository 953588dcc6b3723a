"""Choreographic devices as permutations of directions.

Icosahedral inversions are derived, not tabulated.  Each one is the only
non-identity symmetry that fixes a body plane pointwise:

    fb  fixes the vertical plane   (v3 v4 v11 v12)
    lh  fixes the horizontal plane (v5 v6 v7 v8)
    lr  fixes the sagittal plane   (v1 v2 v9 v10)

Vertices on the fixed plane map to themselves.  Choreographically they have
no inversion of that kind, and :func:`fixed_steps` reports them.

Transpositions ``T<k>`` act on the 12 clock positions, not on vertices.  They
live on the pseudo-solid ``"clock"`` and reach directions only through a
scale (see :mod:`labansym.scale`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    EmptySequenceError,
    SolidMismatchError,
    UnknownLimbError,
    UnsupportedSolidError,
)
from .permgroup import (
    Permutation,
    compose,
    identity,
    orbit,
    point_stabilizer,
    pointwise_set_stabilizer,
)
from .polyhedra import (
    BodyPlane,
    Direction,
    Polyhedron,
    body_plane,
    build,
    direction_at,
    full_symmetry_group,
    neighbors,
    rotation_group,
)

CLOCK = "clock"

_PLANE_FOR = {"fb": "vertical", "lh": "horizontal", "lr": "sagittal"}


@dataclass(frozen=True)
class Device:
    name: str
    perm: Permutation
    solid: str
    trail: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.trail:
            object.__setattr__(self, "trail", (self.name,))

    def is_identity(self) -> bool:
        return self.perm.is_identity()

    def same_action(self, other: "Device") -> bool:
        return self.solid == other.solid and self.perm == other.perm


@dataclass(frozen=True)
class MovementSequence:
    steps: tuple[Direction, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if len({d.solid for d in steps}) > 1:
            raise SolidMismatchError("a movement sequence must stay on one solid")

    @classmethod
    def of(cls, *tokens_or_dirs) -> "MovementSequence":
        from .polyhedra import direction

        return cls(tuple(d if isinstance(d, Direction) else direction(d) for d in tokens_or_dirs))

    @property
    def solid(self) -> str | None:
        return self.steps[0].solid if self.steps else None

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d.vertex for d in self.steps)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self):
        return " ".join(d.token for d in self.steps)


@dataclass(frozen=True)
class NormalZone:
    limb: str
    standard: Direction
    range: frozenset[Direction]
    cycle: tuple[Direction, ...]  # the range in rotational order, for display


def inversion_from_plane(p: Polyhedron, plane: BodyPlane | str) -> Device:
    if p.kind != "icosahedron":
        raise UnsupportedSolidError(f"plane inversions are defined on the icosahedron, not the {p.kind}")
    if isinstance(plane, str):
        plane = body_plane(plane)
    stab = pointwise_set_stabilizer(full_symmetry_group(p), plane.fixed_vertices)
    if stab.order != 2:
        raise AssertionError(f"stabilizer of the {plane.name} plane has order {stab.order}, expected 2")
    name = {v: k for k, v in _PLANE_FOR.items()}[plane.name]
    return Device(name, stab.non_identity()[0], p.kind)


def inversion(name: str) -> Device:
    """One of ``fb``, ``lh``, ``lr`` on the icosahedron."""
    return inversion_from_plane(build("icosahedron"), _PLANE_FOR[name])


def antipodal_device(solid: str = "icosahedron") -> Device:
    p = build(solid)
    name = "octa" if solid == "octahedron" else "diam"
    return Device(name, p.antipode_map, solid)


def identity_device(solid: str) -> Device:
    n = 12 if solid == CLOCK else build(solid).n
    return Device("identity", identity(n), solid)


def transposition(k: int) -> Device:
    k %= 12
    return Device(f"T{k}", Permutation(tuple((i + k) % 12 for i in range(12))), CLOCK)


def apply(d: Device, dir: Direction) -> Direction:
    if dir.solid != d.solid:
        raise SolidMismatchError(f"device {d.name!r} acts on the {d.solid}, not on {dir.token} ({dir.solid})")
    return direction_at(d.solid, d.perm.mapping[dir.vertex])


def invert_octahedral(dir: Direction) -> Direction:
    if dir.solid != "octahedron":
        raise SolidMismatchError(f"{dir.token} is not an octahedral direction")
    return apply(antipodal_device("octahedron"), dir)


def octahedral_axis_inversion(dir: Direction) -> Direction:
    """Inversion read off orbits, one axis at a time.

    For a vertex ``v`` take the half-turn about an axis perpendicular to
    ``v``'s own axis, restrict to the stabilizer of that axis' endpoint
    inside the group it generates, and return the other member of ``v``'s
    orbit.  Kept as an independent route to :func:`invert_octahedral`.
    """
    from .permgroup import closure

    if dir.solid != "octahedron":
        raise SolidMismatchError(f"{dir.token} is not an octahedral direction")
    p = build("octahedron")
    v = dir.vertex
    pivot = min(u for u in neighbors(p, v))
    half_turns = [
        g for g in point_stabilizer(rotation_group(p), pivot)
        if g.order() == 2 and g.mapping[v] != v
    ]
    h = point_stabilizer(closure(half_turns[:1]), pivot)
    (other,) = orbit(h, v) - {v}
    return direction_at("octahedron", other)


def oplus(p: MovementSequence, r: MovementSequence) -> Direction:
    """Do ``p`` then ``r``; the resulting direction is ``r``'s destination."""
    if not len(p) or not len(r):
        raise EmptySequenceError("⊕ needs two nonempty sequences")
    if p.solid != r.solid:
        raise SolidMismatchError("⊕ operands must come from one solid")
    return r.steps[-1]


def apply_sequence(d: Device, s: MovementSequence) -> MovementSequence:
    return MovementSequence(tuple(apply(d, x) for x in s))


def fixed_steps(d: Device, s: MovementSequence) -> list[int]:
    """0-based positions of steps the device leaves where they are."""
    return [i for i, x in enumerate(s) if d.perm.mapping[x.vertex] == x.vertex]


def compose_devices(d1: Device, d2: Device) -> Device:
    """``d1`` first, then ``d2``."""
    if d1.solid != d2.solid:
        raise SolidMismatchError(f"cannot compose a {d1.solid} device with a {d2.solid} device")
    return Device("composite", compose(d2.perm, d1.perm), d1.solid, d1.trail + d2.trail)


def chain(devices: Sequence[Device]) -> Device:
    out = devices[0]
    for d in devices[1:]:
        out = compose_devices(out, d)
    return out


LIMBS = {
    "left-arm": 3,
    "right-arm": 2,
    "left-leg": 11,
    "right-leg": 10,
}


def normal_zone(p: Polyhedron, limb: str) -> NormalZone:
    if p.kind != "icosahedron":
        raise UnsupportedSolidError("normal zones are defined on the icosahedron")
    try:
        std = LIMBS[limb]
    except KeyError:
        raise UnknownLimbError(f"unknown limb {limb!r}; expected one of {', '.join(LIMBS)}") from None
    stab = point_stabilizer(rotation_group(p), std)
    nb = neighbors(p, std)
    start = min(nb)
    rng = orbit(stab, start)
    # walk the orbit with the stabilizer element stepping to start's lower link neighbour
    step_to = min(neighbors(p, start) & rng)
    (r,) = [g for g in stab if g.mapping[start] == step_to]
    cycle, x = [], start
    for _ in range(len(rng)):
        cycle.append(x)
        x = r.mapping[x]
    dirs = p.directions
    return NormalZone(limb, dirs[std], frozenset(dirs[v] for v in rng), tuple(dirs[v] for v in cycle))

