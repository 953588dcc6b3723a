"""Text forms: direction sequences, device expressions and scripts.

Sequences are whitespace-separated direction tokens (``"MRF MLB"``).  Device
expressions join atoms with ``.`` and apply them left to right::

    fb  lh  lr  octa  diam  T0 .. T11        e.g.  fb.lr

Scripts are line oriented; ``#`` starts a comment::

    scale default
    seq A = MRF MLB
    form g @ default = 0 2 4 6 8 10
    apply fb.lr A -> A2
    apply T3 g -> g3

Every parser failure raises :class:`~labansym.errors.ParseError` (or another
:class:`~labansym.errors.LabanError`) carrying a 1-based token index, or a
``line:col`` position for scripts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .devices import (
    CLOCK,
    Device,
    MovementSequence,
    antipodal_device,
    apply_sequence,
    chain,
    inversion,
    transposition,
)
from .errors import LabanError, MixedSolidError, ParseError, SolidMismatchError, UnknownDirectionError
from .polyhedra import direction
from .scale import Scale, ScaleConfig, TraceForm, apply_device_on_clock, device_on_clock

_WORD = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*\Z")
_TRANSPOSE = re.compile(r"T([0-9]+)\Z")


def _decode(text) -> str:
    if isinstance(text, (bytes, bytearray)):
        try:
            return bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 (byte {exc.start})") from None
    if not isinstance(text, str):
        raise ParseError(f"expected text, got {type(text).__name__}")
    return text


def parse_sequence(text) -> MovementSequence:
    words = _decode(text).split()
    if not words:
        raise ParseError("empty sequence")
    steps = []
    for i, w in enumerate(words, 1):
        try:
            d = direction(w)
        except UnknownDirectionError:
            raise ParseError(f"unknown direction {w!r}", token=i) from None
        if steps and d.solid != steps[0].solid:
            raise MixedSolidError(
                f"{w} is on the {d.solid} but the sequence started on the {steps[0].solid}", token=i
            )
        steps.append(d)
    return MovementSequence(tuple(steps))


def serialize_sequence(s: MovementSequence) -> str:
    return " ".join(d.token for d in s.steps)


_ATOM_SOLID = {"fb": "icosahedron", "lh": "icosahedron", "lr": "icosahedron", "octa": "octahedron"}


def _atom_solid(atom: str, index: int) -> str | None:
    if atom in _ATOM_SOLID:
        return _ATOM_SOLID[atom]
    if atom == "diam":
        return None
    m = _TRANSPOSE.match(atom)
    if m:
        k = int(m.group(1))
        if k > 11 or (len(m.group(1)) > 1 and m.group(1)[0] == "0"):
            raise ParseError(f"transposition {atom!r} must be T0..T11", token=index)
        return CLOCK
    raise ParseError(f"unknown device {atom!r}", token=index)


def parse_device_expr(text, solid: str | None = None, scale: Scale | None = None) -> Device:
    """Parse ``atom(.atom)*`` into one composite device.

    ``solid`` tells ``diam`` which solid to act on when nothing else in the
    expression does.  With ``scale`` given, icosahedral atoms may be mixed
    with transpositions; the result then acts on clock positions.
    """
    src = _decode(text).strip()
    if not src:
        raise ParseError("empty device expression")
    atoms = src.split(".")
    solids = []
    for i, atom in enumerate(atoms, 1):
        if not atom:
            raise ParseError("empty device name around '.'", token=i)
        solids.append(_atom_solid(atom, i))

    vertex_solids = [s for s in solids if s not in (None, CLOCK)]
    for i, s in enumerate(solids, 1):
        if s not in (None, CLOCK) and s != vertex_solids[0]:
            raise SolidMismatchError(
                f"device {atoms[i - 1]!r} (token {i}) is on the {s}, "
                f"earlier devices are on the {vertex_solids[0]}"
            )
    has_clock = CLOCK in solids
    if vertex_solids:
        base = vertex_solids[0]
    elif solid is not None and solid != CLOCK:
        base = solid
    else:
        base = "icosahedron"
    if has_clock and any(s != CLOCK for s in solids):
        if base != "icosahedron":
            raise SolidMismatchError("transpositions only combine with icosahedral devices")
        if scale is None:
            raise SolidMismatchError("mixing transpositions with vertex devices needs a scale")

    devices = []
    for atom, s in zip(atoms, solids):
        if s == CLOCK:
            d = transposition(int(atom[1:]))
        elif atom == "diam":
            d = antipodal_device(base)
        elif atom == "octa":
            d = antipodal_device("octahedron")
        else:
            d = inversion(atom)
        if has_clock and d.solid != CLOCK:
            d = device_on_clock(scale, d)
        devices.append(d)
    if len(devices) == 1:
        return devices[0]
    return chain(devices)


# ---------------------------------------------------------------- scripts


@dataclass(frozen=True)
class SeqDecl:
    line: int
    name: str
    sequence: MovementSequence


@dataclass(frozen=True)
class FormDecl:
    line: int
    name: str
    scale: str | None
    path: tuple[int, ...]


@dataclass(frozen=True)
class ScaleSelect:
    line: int
    scale: str


@dataclass(frozen=True)
class Apply:
    line: int
    col: int
    expr: str
    source: str
    target: str


Statement = Union[SeqDecl, FormDecl, ScaleSelect, Apply]


@dataclass
class Script:
    statements: list[Statement] = field(default_factory=list)


def _fail(message, line, col):
    raise ParseError(message, line=line, col=col)


def _words(text):
    return [(m.group(), m.start() + 1) for m in _WORD.finditer(text)]


def _name(word, line, col):
    if not _NAME.match(word):
        _fail(f"invalid name {word!r}", line, col)
    return word


def _split_at(words, sep, line, what):
    idx = [i for i, (w, _) in enumerate(words) if w == sep]
    if len(idx) != 1:
        col = words[0][1] if words else 1
        _fail(f"{what} needs exactly one {sep!r}", line, col)
    return words[: idx[0]], words[idx[0] + 1:]


def parse_script(text) -> Script:
    text = _decode(text)
    script = Script()
    declared: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        words = _words(body)
        if not words:
            continue
        head, col = words[0]
        rest = words[1:]
        if head == "seq":
            left, right = _split_at(rest, "=", lineno, "seq")
            if len(left) != 1:
                _fail("expected 'seq <name> = <tokens>'", lineno, col)
            name = _name(left[0][0], lineno, left[0][1])
            if not right:
                _fail("empty sequence", lineno, col)
            try:
                seq = parse_sequence(" ".join(w for w, _ in right))
            except ParseError as exc:
                _fail(exc.message, lineno, right[(exc.token or 1) - 1][1])
            stmt = SeqDecl(lineno, name, seq)
            kind = "seq"
        elif head == "form":
            left, right = _split_at(rest, "=", lineno, "form")
            scale_name = None
            if len(left) == 3 and left[1][0] == "@":
                scale_name = _name(left[2][0], lineno, left[2][1])
            elif len(left) != 1:
                _fail("expected 'form <name> [@ <scale>] = <positions>'", lineno, col)
            name = _name(left[0][0], lineno, left[0][1])
            path = []
            for w, c in right:
                for piece in filter(None, w.split(",")):
                    if not re.fullmatch(r"[0-9]+", piece) or int(piece) > 11:
                        _fail(f"clock position {piece!r} must be an integer 0..11", lineno, c)
                    path.append(int(piece))
            if not path:
                _fail("empty trace form", lineno, col)
            stmt = FormDecl(lineno, name, scale_name, tuple(path))
            kind = "form"
        elif head == "scale":
            if len(rest) != 1:
                _fail("expected 'scale <name>'", lineno, col)
            script.statements.append(ScaleSelect(lineno, _name(rest[0][0], lineno, rest[0][1])))
            continue
        elif head == "apply":
            if len(rest) != 4 or rest[2][0] != "->":
                _fail("expected 'apply <device-expr> <name> -> <newname>'", lineno, col)
            (expr, ecol), (src, scol), _, (dst, dcol) = rest
            _atoms_ok(expr, lineno, ecol)
            if src not in declared:
                _fail(f"{src!r} is not declared", lineno, scol)
            name = _name(dst, lineno, dcol)
            stmt = Apply(lineno, ecol, expr, src, name)
            kind = declared[src]
        else:
            _fail(f"unknown statement {head!r}", lineno, col)
        new = stmt.target if isinstance(stmt, Apply) else stmt.name
        if new in declared:
            _fail(f"{new!r} is already declared", lineno, col)
        declared[new] = kind
        script.statements.append(stmt)
    return script


def _atoms_ok(expr, line, col):
    offset = 0
    for i, atom in enumerate(expr.split("."), 1):
        if not atom:
            _fail("empty device name around '.'", line, col + offset)
        try:
            _atom_solid(atom, i)
        except ParseError as exc:
            _fail(exc.message, line, col + offset)
        offset += len(atom) + 1


@dataclass
class ScriptResult:
    sequences: dict[str, MovementSequence]
    forms: dict[str, TraceForm]
    lines: list[str]


def run_script(script: Script, config: ScaleConfig) -> ScriptResult:
    """Execute ``script``; output lines are one per declaration and application."""
    seqs: dict[str, MovementSequence] = {}
    forms: dict[str, TraceForm] = {}
    lines: list[str] = []
    current = None
    for st in script.statements:
        try:
            if isinstance(st, ScaleSelect):
                config.scale(st.scale)
                current = st.scale
            elif isinstance(st, SeqDecl):
                seqs[st.name] = st.sequence
                lines.append(f"{st.name} = {serialize_sequence(st.sequence)}")
            elif isinstance(st, FormDecl):
                scale_name = st.scale or current
                if scale_name is None:
                    _fail(f"form {st.name!r} has no scale; add '@ <scale>' or a 'scale' line", st.line, 1)
                config.scale(scale_name)
                forms[st.name] = TraceForm(st.name, st.path, scale_name)
                lines.append(f"{st.name} @ {scale_name} = {_fmt_path(st.path)}")
            else:
                if st.source in seqs:
                    src = seqs[st.source]
                    dev = parse_device_expr(st.expr, solid=src.solid)
                    out = apply_sequence(dev, src)
                    seqs[st.target] = out
                    lines.append(f"{st.target} = {serialize_sequence(out)}")
                else:
                    src = forms[st.source]
                    sc = config.scale(src.scale)
                    dev = parse_device_expr(st.expr, scale=sc)
                    if dev.solid not in (CLOCK, "icosahedron"):
                        raise SolidMismatchError(f"{st.expr!r} does not act on the clock")
                    out = apply_device_on_clock(sc, dev, src)
                    out = TraceForm(st.target, out.path, src.scale)
                    forms[st.target] = out
                    lines.append(f"{st.target} @ {src.scale} = {_fmt_path(out.path)}")
        except ParseError as exc:
            if exc.line is not None:
                raise
            _fail(exc.message, st.line, getattr(st, "col", 1))
        except LabanError as exc:
            _fail(str(exc), st.line, getattr(st, "col", 1))
    return ScriptResult(seqs, forms, lines)


def _fmt_path(path):
    return " ".join(str(p) for p in path)
