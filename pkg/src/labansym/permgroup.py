"""Permutations on ``{0..n-1}``, groups by closure, orbits and stabilizers.

Groups here are tiny (order ≤ 120), so a group is just its full element list;
there is no stabilizer chain.  Composition is "apply the right operand first":
``compose(p, q)(i) == p(q(i))``.

Indices are 0-based internally.  Human-facing text (cycle notation, vertex
names) is 1-based, ``(1 2)(3 4)`` meaning v1↔v2, v3↔v4.

A note on the octahedron: inside the full rotation group (order 24) the
stabilizer of a vertex has order 4, not 2.  The two-element group
``{e, (v1 v2)(v3 v4)}`` is the stabilizer of v5 inside the cyclic subgroup
generated by the half-turn about the v5-v6 axis.  :func:`point_stabilizer`
always returns the true stabilizer of whatever group it is given.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    DomainMismatchError,
    EmptyGeneratorsError,
    MalformedCyclesError,
    OutOfRangeError,
    ParseError,
)


@dataclass(frozen=True)
class Permutation:
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        n = len(mapping)
        if n == 0:
            raise DomainMismatchError("a permutation needs a positive domain size")
        if sorted(mapping) != list(range(n)):
            raise MalformedCyclesError(f"mapping {mapping} is not a bijection on 0..{n - 1}")
        object.__setattr__(self, "mapping", mapping)

    @property
    def domain_size(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        _check_point(i, self.domain_size)
        return self.mapping[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.mapping) if i == x)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.domain_size):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.mapping[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.mapping[nxt]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity():
            p, k = compose(self, p), k + 1
        return k

    def __str__(self):
        return format_cycles(self)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def _check_point(i, n):
    if not isinstance(i, (int, np.integer)) or not 0 <= i < n:
        raise OutOfRangeError(f"point {i!r} is outside the domain 0..{n - 1}")


def from_cycles(cycles: Iterable[Sequence[int]], domain_size: int) -> Permutation:
    """Build a permutation from 0-based cycles; unlisted points are fixed."""
    if domain_size < 1:
        raise DomainMismatchError("domain_size must be positive")
    mapping = list(range(domain_size))
    seen = set()
    for cyc in cycles:
        cyc = list(cyc)
        for x in cyc:
            _check_point(x, domain_size)
            if x in seen:
                raise MalformedCyclesError(f"point {x} appears more than once")
            seen.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mapping[a] = b
    return Permutation(tuple(mapping))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p∘q``: apply ``q`` first, then ``p``."""
    if p.domain_size != q.domain_size:
        raise DomainMismatchError(
            f"cannot compose permutations on {p.domain_size} and {q.domain_size} points"
        )
    return Permutation(tuple(p.mapping[j] for j in q.mapping))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.domain_size
    for i, x in enumerate(p.mapping):
        inv[x] = i
    return Permutation(tuple(inv))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, domain_size: int) -> Permutation:
    """Read 1-based cycle notation such as ``(1 2)(3 4)``; ``e`` is the identity."""
    stripped = text.strip()
    if stripped == "e":
        return identity(domain_size)
    if not stripped:
        raise ParseError("empty cycle notation")
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ParseError(f"unexpected text {stripped[pos:m.start()].strip()!r}")
        body = m.group(1).split()
        if not body:
            raise ParseError("empty cycle '()'")
        try:
            cycles.append([int(tok) - 1 for tok in body])
        except ValueError:
            raise ParseError(f"non-integer entry in cycle ({m.group(1)})") from None
        pos = m.end()
    if stripped[pos:].strip() or not cycles:
        raise ParseError(f"unexpected text {stripped[pos:].strip() or stripped!r}")
    if any(x < 0 for c in cycles for x in c):
        raise OutOfRangeError("cycle entries are 1-based")
    return from_cycles(cycles, domain_size)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "e"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[frozenset[int], ...]

    def block_of(self, point: int) -> frozenset[int]:
        for b in self.blocks:
            if point in b:
                return b
        raise OutOfRangeError(f"point {point} is not covered by the partition")

    def as_sets(self) -> set[frozenset[int]]:
        return set(self.blocks)

    def nontrivial(self) -> list[frozenset[int]]:
        return [b for b in self.blocks if len(b) > 1]

    def fixed(self) -> list[int]:
        return sorted(next(iter(b)) for b in self.blocks if len(b) == 1)


@dataclass(frozen=True, eq=False)
class PermGroup:
    """A finite permutation group held as its complete element list.

    Build with :func:`closure`; ``elements`` always starts with the identity.
    """

    domain_size: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return isinstance(p, Permutation) and p in self._element_set

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.domain_size == other.domain_size and self._element_set == other._element_set

    def __hash__(self):
        return hash((self.domain_size, self._element_set))

    @cached_property
    def _element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array([p.mapping for p in self.elements], dtype=np.int64)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.domain_size == other.domain_size and self._element_set <= other._element_set

    def non_identity(self) -> list[Permutation]:
        return [p for p in self.elements if not p.is_identity()]

    def cayley_table(self) -> np.ndarray:
        """``table[a, b]`` is the index of ``elements[a] ∘ elements[b]``."""
        return kernels.cayley_table(self.array)

    def __repr__(self):
        return f"PermGroup(degree={self.domain_size}, order={self.order})"


def closure(generators: Sequence[Permutation]) -> PermGroup:
    """Smallest group containing ``generators``."""
    generators = tuple(generators)
    if not generators:
        raise EmptyGeneratorsError("closure needs at least one generator")
    n = generators[0].domain_size
    for g in generators:
        if g.domain_size != n:
            raise DomainMismatchError("generators act on different domain sizes")
    rows = kernels.closure(np.array([g.mapping for g in generators], dtype=np.int64))
    return _from_rows(n, generators, rows)


def _from_rows(n, generators, rows) -> PermGroup:
    elements = tuple(Permutation(tuple(int(x) for x in row)) for row in rows)
    return PermGroup(n, tuple(generators), elements)


def _subgroup(g: PermGroup, mask: np.ndarray) -> PermGroup:
    keep = tuple(p for p, k in zip(g.elements, mask) if k)
    # the identity stays first because it is first in g and always kept
    gens = tuple(p for p in keep if not p.is_identity()) or (keep[0],)
    return PermGroup(g.domain_size, gens, keep)


def orbit(g: PermGroup, point: int) -> frozenset[int]:
    _check_point(point, g.domain_size)
    return frozenset(int(x) for x in g.array[:, point])


def orbit_partition(g: PermGroup) -> OrbitPartition:
    labels = kernels.orbit_labels(g.array)
    blocks: dict[int, set[int]] = {}
    for i, lab in enumerate(labels):
        blocks.setdefault(int(lab), set()).add(i)
    return OrbitPartition(tuple(frozenset(blocks[k]) for k in sorted(blocks)))


def point_stabilizer(g: PermGroup, point: int) -> PermGroup:
    _check_point(point, g.domain_size)
    return _subgroup(g, g.array[:, point] == point)


def pointwise_set_stabilizer(g: PermGroup, fixed: Iterable[int]) -> PermGroup:
    fixed = sorted(set(fixed))
    for x in fixed:
        _check_point(x, g.domain_size)
    if not fixed:
        return g
    idx = np.array(fixed, dtype=np.int64)
    return _subgroup(g, (g.array[:, idx] == idx).all(axis=1))


def setwise_stabilizer(g: PermGroup, s: Iterable[int]) -> PermGroup:
    s = sorted(set(s))
    for x in s:
        _check_point(x, g.domain_size)
    if not s:
        return g
    members = np.zeros(g.domain_size, dtype=np.bool_)
    members[s] = True
    images = g.array[:, s]
    return _subgroup(g, members[images].all(axis=1))
