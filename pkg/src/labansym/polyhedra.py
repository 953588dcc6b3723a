"""The three reference solids: octahedron, cube and icosahedron.

Frame: +x is right, +y is forward, +z is up.  Vertex indices are 0-based in
code and printed as v1..vN.  Edges are not tabulated; they are recovered from
the coordinates as the minimal-distance pairs, so the geometry is what gets
tested.  Symmetry groups come from the geometry as well: every isometry of a
regular solid is fixed by where it sends one vertex and two of its
neighbours, so each candidate image triple yields a linear map that is kept
when it is orthogonal and permutes the vertex set.

Direction tokens (26 in all, case-sensitive):

    octahedron   UP DOWN BACK FWD RIGHT LEFT             (v1..v6)
    icosahedron  FH BH HR HL MRF MLF MRB MLB FL BL LR LL (v1..v12)
    cube         RFH LFH RBH LBH RFL LFL RBL LBL         (v1..v8)

The octahedron follows v1 head, v2 feet, v3 back, v4 front, v5 right,
v6 left.  Cube tokens read right/left, forward/back, high/low.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import kernels
from .errors import OutOfRangeError, UnknownDirectionError, UnknownSolidError
from .permgroup import Permutation, PermGroup

PHI = (1 + math.sqrt(5)) / 2

SOLIDS = ("octahedron", "cube", "icosahedron")

_OCTAHEDRON = [
    ("UP", "up (head)", (0, 0, 1)),
    ("DOWN", "down (feet)", (0, 0, -1)),
    ("BACK", "middle back", (0, -1, 0)),
    ("FWD", "middle front", (0, 1, 0)),
    ("RIGHT", "middle right", (1, 0, 0)),
    ("LEFT", "middle left", (-1, 0, 0)),
]

_ICOSAHEDRON = [
    ("FH", "forward high", (0, 1, PHI)),
    ("BH", "back high", (0, -1, PHI)),
    ("HR", "high right", (PHI, 0, 1)),
    ("HL", "high left", (-PHI, 0, 1)),
    ("MRF", "middle right forward", (1, PHI, 0)),
    ("MLF", "middle left forward", (-1, PHI, 0)),
    ("MRB", "middle right back", (1, -PHI, 0)),
    ("MLB", "middle left back", (-1, -PHI, 0)),
    ("FL", "forward low", (0, 1, -PHI)),
    ("BL", "back low", (0, -1, -PHI)),
    ("LR", "low right", (PHI, 0, -1)),
    ("LL", "low left", (-PHI, 0, -1)),
]

_CUBE = [
    ("RFH", "right forward high", (1, 1, 1)),
    ("LFH", "left forward high", (-1, 1, 1)),
    ("RBH", "right back high", (1, -1, 1)),
    ("LBH", "left back high", (-1, -1, 1)),
    ("RFL", "right forward low", (1, 1, -1)),
    ("LFL", "left forward low", (-1, 1, -1)),
    ("RBL", "right back low", (1, -1, -1)),
    ("LBL", "left back low", (-1, -1, -1)),
]

_TABLES = {"octahedron": _OCTAHEDRON, "cube": _CUBE, "icosahedron": _ICOSAHEDRON}

# four icosahedron vertices (0-based) lying in each body plane
BODY_PLANES = {
    "sagittal": frozenset({0, 1, 8, 9}),
    "horizontal": frozenset({4, 5, 6, 7}),
    "vertical": frozenset({2, 3, 10, 11}),
}

REL_TOL = 1e-9


@dataclass(frozen=True)
class Direction:
    token: str
    solid: str
    vertex: int

    @property
    def name(self) -> str:
        return _TABLES[self.solid][self.vertex][1]

    def __str__(self):
        return self.token


@dataclass(frozen=True)
class BodyPlane:
    name: str
    fixed_vertices: frozenset[int]


def body_plane(name: str) -> BodyPlane:
    try:
        return BodyPlane(name, BODY_PLANES[name])
    except KeyError:
        raise UnknownSolidError(
            f"unknown body plane {name!r}; expected one of {', '.join(BODY_PLANES)}"
        ) from None


@dataclass(frozen=True, eq=False)
class Polyhedron:
    kind: str
    coords: np.ndarray
    directions: tuple[Direction, ...]
    edges: frozenset[frozenset[int]]
    antipode_map: Permutation

    @property
    def n(self) -> int:
        return len(self.directions)

    @property
    def vertices(self):
        return [(i, tuple(self.coords[i]), self.directions[i]) for i in range(self.n)]

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.bool_)
        for e in self.edges:
            a, b = tuple(e)
            adj[a, b] = adj[b, a] = True
        return adj

    def edge_lengths(self) -> np.ndarray:
        return np.array([np.linalg.norm(self.coords[a] - self.coords[b])
                         for a, b in (tuple(e) for e in self.edges)])

    def preserves_edges(self, p: Permutation) -> bool:
        return all(frozenset(p.mapping[v] for v in e) in self.edges for e in self.edges)

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "vertices": [
                {"index": i + 1, "coords": [float(c) for c in self.coords[i]], "token": d.token}
                for i, d in enumerate(self.directions)
            ],
            "edges": sorted([sorted(v + 1 for v in e) for e in self.edges]),
        }
        return json.dumps(doc, indent=2)


def _check_vertex(p: Polyhedron, v):
    if not isinstance(v, (int, np.integer)) or not 0 <= v < p.n:
        raise OutOfRangeError(f"vertex {v!r} is outside 0..{p.n - 1} for the {p.kind}")


@lru_cache(maxsize=None)
def build(kind: str) -> Polyhedron:
    if kind not in _TABLES:
        raise UnknownSolidError(f"unknown solid {kind!r}; expected one of {', '.join(SOLIDS)}")
    table = _TABLES[kind]
    coords = np.array([c for _, _, c in table], dtype=np.float64)
    coords.setflags(write=False)
    directions = tuple(Direction(tok, kind, i) for i, (tok, _, _) in enumerate(table))

    dists = np.linalg.norm(coords[:, None, :] - coords[None, :, :], axis=-1)
    shortest = dists[~np.eye(len(coords), dtype=bool)].min()
    edges = frozenset(
        frozenset((a, b)) for a, b in combinations(range(len(coords)), 2)
        if abs(dists[a, b] - shortest) <= REL_TOL * shortest
    )

    anti = kernels.match_points(-coords, coords, REL_TOL * shortest)
    if (anti < 0).any():
        raise AssertionError(f"{kind} coordinates are not centrally symmetric")
    return Polyhedron(kind, coords, directions, edges, Permutation(tuple(int(x) for x in anti)))


def neighbors(p: Polyhedron, v: int) -> frozenset[int]:
    _check_vertex(p, v)
    return frozenset(u for e in p.edges if v in e for u in e if u != v)


def antipode(p: Polyhedron, v: int) -> int:
    _check_vertex(p, v)
    return p.antipode_map.mapping[v]


def _reference_frame(p: Polyhedron):
    """A vertex and two neighbours whose position vectors span R^3."""
    v0 = 0
    for v1, v2 in combinations(sorted(neighbors(p, v0)), 2):
        m = p.coords[[v0, v1, v2]]
        if abs(np.linalg.det(m)) > 1e-6:
            return v0, v1, v2
    raise AssertionError(f"no spanning vertex frame on the {p.kind}")


@lru_cache(maxsize=None)
def _isometries(kind: str) -> tuple[tuple[Permutation, int], ...]:
    """All (vertex permutation, det sign) pairs induced by isometries."""
    p = build(kind)
    v0, v1, v2 = _reference_frame(p)
    ref_inv = np.linalg.inv(p.coords[[v0, v1, v2]].T)
    tol = REL_TOL * 1e3 * float(np.abs(p.coords).max())
    found = []
    for a in range(p.n):
        nb = sorted(neighbors(p, a))
        for b in nb:
            for c in nb:
                if b == c:
                    continue
                m = p.coords[[a, b, c]].T @ ref_inv
                if not np.allclose(m.T @ m, np.eye(3), atol=1e-9):
                    continue
                perm = kernels.match_points(p.coords @ m.T, p.coords, tol)
                if (perm < 0).any():
                    continue
                found.append((Permutation(tuple(int(x) for x in perm)),
                              int(round(np.linalg.det(m)))))
    # identity first so groups keep the usual element order
    found.sort(key=lambda t: (not t[0].is_identity(), t[0].mapping))
    return tuple(found)


def _group(kind, perms) -> PermGroup:
    perms = tuple(perms)
    gens = tuple(q for q in perms if not q.is_identity())
    return PermGroup(build(kind).n, gens, perms)


@lru_cache(maxsize=None)
def _rotation_group(kind: str) -> PermGroup:
    return _group(kind, (q for q, det in _isometries(kind) if det == 1))


@lru_cache(maxsize=None)
def _full_group(kind: str) -> PermGroup:
    return _group(kind, (q for q, _ in _isometries(kind)))


def rotation_group(p: Polyhedron) -> PermGroup:
    """Vertex permutations induced by proper rotations (24, 24, 60)."""
    return _rotation_group(p.kind)


def full_symmetry_group(p: Polyhedron) -> PermGroup:
    """Rotations together with reflections and rotoreflections (48, 48, 120)."""
    return _full_group(p.kind)


def is_rotation(p: Polyhedron, perm: Permutation) -> bool:
    return perm in rotation_group(p)


_TOKENS = {d.token: d for kind in SOLIDS for d in build(kind).directions}
if len(_TOKENS) != 26:  # pragma: no cover - guards the table above
    raise AssertionError("direction tokens must be unique across the solids")


def all_directions() -> list[Direction]:
    return list(_TOKENS.values())


def vertex_for_direction(token: str) -> tuple[str, int]:
    d = direction(token)
    return d.solid, d.vertex


def direction(token: str) -> Direction:
    try:
        return _TOKENS[token]
    except (KeyError, TypeError):
        raise UnknownDirectionError(f"unknown direction token {token!r}") from None


def direction_at(kind: str, v: int) -> Direction:
    p = build(kind)
    _check_vertex(p, v)
    return p.directions[v]


def vname(v: int) -> str:
    return f"v{v + 1}"
