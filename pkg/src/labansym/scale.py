"""The twelve-hour clock of a scale on the icosahedron.

A :class:`Scale` pairs clock positions 0..11 with the icosahedron's twelve
vertices.  Position 0 sits at twelve o'clock and positions increase
clockwise.  Triangles, quadrangles and diameters are the cosets of the
subgroups generated by 4, 3 and 6 in Z12.

The bundled ``default`` scale is a stand-in.  Positions ``p`` and ``p + 6``
are antipodal vertices, so clock diameters are geometric opposites.  It is
not Laban's published ordering.  Load a config file (:func:`load_config`) to
use that ordering.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .devices import CLOCK, Device
from .errors import InvalidScaleError, InvalidSubgroupError, OutOfRangeError, SolidMismatchError
from .permgroup import Permutation
from .polyhedra import Direction, antipode, build

N = 12


class ScaleCompatibilityWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ClockPosition:
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % N)

    def __add__(self, k: int) -> "ClockPosition":
        return ClockPosition(self.value + int(k))

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class Scale:
    name: str
    positions: tuple[int, ...]  # position -> 0-based vertex

    def vertex_at(self, pos: int) -> int:
        return vertex_at(self, pos)

    def position_of(self, v: int) -> int:
        return position_of(self, v)

    def is_diametral(self) -> bool:
        ico = build("icosahedron")
        return all(self.positions[(p + 6) % N] == antipode(ico, self.positions[p]) for p in range(N))


@dataclass(frozen=True)
class TraceForm:
    name: str
    path: tuple[int, ...]
    scale: str | None = None
    note: str = ""

    def __post_init__(self):
        path = tuple(int(p) for p in self.path)
        if not path:
            raise InvalidScaleError(f"trace form {self.name!r} has an empty path")
        for p in path:
            if not 0 <= p < N:
                raise OutOfRangeError(f"clock position {p} is outside 0..11")
        object.__setattr__(self, "path", path)


def make_scale(name: str, vertex_order: Sequence[int]) -> Scale:
    """``vertex_order`` holds 0-based vertices, position ``i`` first."""
    order = list(vertex_order)
    if len(order) != N:
        raise InvalidScaleError(f"a scale lists 12 vertices, got {len(order)}")
    if any(not isinstance(v, int) or not 0 <= v < N for v in order):
        raise InvalidScaleError(f"scale {name!r} has entries outside v1..v12")
    if len(set(order)) != N:
        missing = sorted(set(range(N)) - set(order))
        raise InvalidScaleError(
            f"scale {name!r} repeats vertices; missing {', '.join(f'v{v + 1}' for v in missing)}"
        )
    return Scale(name, tuple(order))


def vertex_at(s: Scale, pos: int) -> int:
    if not isinstance(pos, int) or not 0 <= pos < N:
        raise OutOfRangeError(f"clock position {pos!r} is outside 0..11")
    return s.positions[pos]


def position_of(s: Scale, v: int) -> int:
    if not isinstance(v, int) or not 0 <= v < N:
        raise OutOfRangeError(f"vertex {v!r} is outside 0..11")
    return s.positions.index(v)


def direction_at_position(s: Scale, pos: int) -> Direction:
    return build("icosahedron").directions[vertex_at(s, pos)]


def transpose(k: int, form: TraceForm) -> TraceForm:
    k %= N
    return TraceForm(form.name, tuple((p + k) % N for p in form.path), form.scale, form.note)


def diametral_clock(p: int) -> int:
    return (int(p) + 6) % N


def coset_family(step: int) -> list[frozenset[int]]:
    if step not in (1, 2, 3, 4, 6, 12):
        raise InvalidSubgroupError(f"{step} does not divide 12")
    return [frozenset(range(r, N, step)) for r in range(step)]


COSET_NAMES = {4: "triangles", 3: "quadrangles", 6: "diameters"}


def clock_permutation(s: Scale, d: Device) -> Permutation:
    """The action of ``d`` on clock positions."""
    if d.solid == CLOCK:
        return d.perm
    if d.solid != "icosahedron":
        raise SolidMismatchError(f"device on the {d.solid} cannot act on an icosahedral scale")
    return Permutation(tuple(s.positions.index(d.perm.mapping[s.positions[p]]) for p in range(N)))


def device_on_clock(s: Scale, d: Device) -> Device:
    return Device(d.name, clock_permutation(s, d), CLOCK, d.trail)


def apply_device_on_clock(s: Scale, d: Device, form: TraceForm) -> TraceForm:
    perm = clock_permutation(s, d)
    return TraceForm(form.name, tuple(perm.mapping[p] for p in form.path), form.scale, form.note)


@dataclass
class ScaleConfig:
    scales: dict[str, Scale]
    trace_forms: dict[str, TraceForm]

    def scale(self, name: str) -> Scale:
        try:
            return self.scales[name]
        except KeyError:
            raise InvalidScaleError(f"no scale named {name!r}") from None

    def form(self, name: str) -> TraceForm:
        try:
            return self.trace_forms[name]
        except KeyError:
            raise InvalidScaleError(f"no trace form named {name!r}") from None


DEFAULT_SCALE = "default"


def _parse_config(doc, origin: str, bundled: bool) -> ScaleConfig:
    if not isinstance(doc, dict):
        raise InvalidScaleError(f"{origin}: top level must be an object")
    scales = {}
    for entry in doc.get("scales", []):
        try:
            name, order = entry["name"], entry["order"]
        except (KeyError, TypeError):
            raise InvalidScaleError(f"{origin}: each scale needs 'name' and 'order'") from None
        if not isinstance(order, list) or not all(isinstance(v, int) for v in order):
            raise InvalidScaleError(f"{origin}: scale {name!r} order must be a list of integers")
        s = make_scale(name, [v - 1 for v in order])
        if not s.is_diametral():
            if bundled or name == DEFAULT_SCALE:
                raise InvalidScaleError(
                    f"{origin}: scale {name!r} must put antipodal vertices six hours apart"
                )
            warnings.warn(
                f"scale {name!r}: positions p and p+6 are not always antipodal vertices",
                ScaleCompatibilityWarning,
                stacklevel=3,
            )
        scales[name] = s
    forms = {}
    for entry in doc.get("trace_forms", []):
        try:
            name, path = entry["name"], entry["path"]
        except (KeyError, TypeError):
            raise InvalidScaleError(f"{origin}: each trace form needs 'name' and 'path'") from None
        scale_name = entry.get("scale")
        if scale_name is not None and scale_name not in scales:
            raise InvalidScaleError(f"{origin}: trace form {name!r} names unknown scale {scale_name!r}")
        if not isinstance(path, list) or not all(isinstance(p, int) for p in path):
            raise InvalidScaleError(f"{origin}: trace form {name!r} path must be a list of integers")
        forms[name] = TraceForm(name, tuple(path), scale_name, entry.get("note", ""))
    return ScaleConfig(scales, forms)


def load_config(path: str | Path | None = None) -> ScaleConfig:
    """Read a scale/trace-form JSON file; ``None`` loads the bundled one."""
    if path is None:
        text = resources.files("labansym").joinpath("data/scales.json").read_text("utf-8")
        origin, bundled = "bundled scales.json", True
    else:
        try:
            text = Path(path).read_text("utf-8")
        except OSError as exc:
            raise InvalidScaleError(f"cannot read {path}: {exc.strerror}") from None
        origin, bundled = str(path), False
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidScaleError(f"{origin}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return _parse_config(doc, origin, bundled)


def default_scale() -> Scale:
    return load_config().scale(DEFAULT_SCALE)


def coset_cover(family: Iterable[frozenset[int]]) -> bool:
    family = list(family)
    return sorted(p for c in family for p in c) == list(range(N))
