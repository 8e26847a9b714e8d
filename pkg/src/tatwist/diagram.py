"""Chord diagrams: fixed-point-free involutions on cyclically ordered points.

A chord diagram with ``n`` chords lives on the endpoints ``0, ..., 2n-1``
arranged around a circle.  It encodes a ribbon graph with a single boundary
component: chords are edges and the internal boundaries obtained by walking
along the inside of the circle are vertices.

Internal boundaries are traced by the permutation::

    tau(i) = opposite((i + 1) mod 2n)

and each cycle of ``tau`` is one vertex, its length being the valence.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DiagramTooLarge,
    DuplicateEndpoint,
    EmptyDiagram,
    EndpointOutOfRange,
    GapOutOfRange,
    ParseError,
    SelfPairedEndpoint,
)

MAX_ENDPOINTS = 2**20


@dataclass(frozen=True)
class VertexCycles:
    """Internal boundaries of a chord diagram.

    Each cycle starts at its smallest endpoint and follows ``tau``; cycles are
    sorted by starting endpoint.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cycles)

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.cycles[k]

    @property
    def valences(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def index_of(self) -> dict[int, int]:
        """Map each endpoint to the index of the cycle containing it."""
        return {e: k for k, cyc in enumerate(self.cycles) for e in cyc}


class ChordDiagram:
    """Immutable chord diagram given by its pairing.

    ``pairing[i]`` is the opposite endpoint of the chord through ``i``.
    Equality and hashing are by pairing, i.e. labelled diagrams; use
    :meth:`equivalent` for equality up to rotation.
    """

    __slots__ = ("_pairing", "_cycles")

    def __init__(self, pairing: Sequence[int]):
        pairing = tuple(int(x) for x in pairing)
        m = len(pairing)
        if m % 2:
            raise DuplicateEndpoint(f"odd number of endpoints ({m})")
        if m > MAX_ENDPOINTS:
            raise DiagramTooLarge(f"{m} endpoints exceeds the cap of {MAX_ENDPOINTS}")
        for i, j in enumerate(pairing):
            if not 0 <= j < m:
                raise EndpointOutOfRange(f"endpoint {j} outside 0..{m - 1}")
            if j == i:
                raise SelfPairedEndpoint(f"endpoint {i} is paired with itself")
        for i, j in enumerate(pairing):
            if pairing[j] != i:
                raise DuplicateEndpoint(f"endpoint {j} is used by more than one chord")
        self._pairing = pairing
        self._cycles = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "ChordDiagram":
        """Build a diagram from a list of endpoint pairs.

        >>> ChordDiagram.from_pairs([(0, 3), (1, 4), (2, 5)]).pairing
        (3, 4, 5, 0, 1, 2)
        """
        pairs = [tuple(p) for p in pairs]
        m = 2 * len(pairs)
        if m > MAX_ENDPOINTS:
            raise DiagramTooLarge(f"{m} endpoints exceeds the cap of {MAX_ENDPOINTS}")
        pairing = [-1] * m
        for p in pairs:
            if len(p) != 2:
                raise ValueError(f"chord {p!r} does not have two endpoints")
            a, b = int(p[0]), int(p[1])
            for x in (a, b):
                if not 0 <= x < m:
                    raise EndpointOutOfRange(f"endpoint {x} outside 0..{m - 1}")
            if a == b:
                raise SelfPairedEndpoint(f"endpoint {a} is paired with itself")
            for x in (a, b):
                if pairing[x] != -1:
                    raise DuplicateEndpoint(f"endpoint {x} appears twice")
            pairing[a], pairing[b] = b, a
        return cls(pairing)

    @classmethod
    def empty(cls) -> "ChordDiagram":
        return cls(())

    # -- basic accessors --------------------------------------------------

    @property
    def pairing(self) -> tuple[int, ...]:
        return self._pairing

    @property
    def n(self) -> int:
        return len(self._pairing) // 2

    @property
    def num_endpoints(self) -> int:
        return len(self._pairing)

    def __len__(self) -> int:
        return self.n

    def opposite(self, i: int) -> int:
        if not 0 <= i < len(self._pairing):
            raise EndpointOutOfRange(f"endpoint {i} outside 0..{len(self._pairing) - 1}")
        return self._pairing[i]

    def chords(self) -> list[tuple[int, int]]:
        """Chords as ``(a, b)`` with ``a < b``, sorted by ``a``.

        The position of a chord in this list is its chord id.
        """
        return [(i, j) for i, j in enumerate(self._pairing) if i < j]

    def chord_id(self, i: int) -> int:
        """Id of the chord through endpoint ``i``."""
        lo = min(i, self.opposite(i))
        return sum(1 for k in range(lo) if self._pairing[k] > k)

    def chord_length(self, i: int) -> int:
        j = self.opposite(i)
        d = abs(i - j)
        return min(d, len(self._pairing) - d)

    # -- topology ---------------------------------------------------------

    def vertex_cycles(self) -> VertexCycles:
        if self._cycles is None:
            p = self._pairing
            m = len(p)
            seen = [False] * m
            cycles = []
            for start in range(m):
                if seen[start]:
                    continue
                cyc = []
                i = start
                while not seen[i]:
                    seen[i] = True
                    cyc.append(i)
                    i = p[(i + 1) % m]
                cycles.append(tuple(cyc))
            # scanning starts in increasing order, so each cycle begins at its minimum
            object.__setattr__(self, "_cycles", VertexCycles(tuple(cycles)))
        return self._cycles

    def vertex_count(self) -> int:
        if self.n == 0:
            return 1  # the disk: one vertex, no edges
        return len(self.vertex_cycles())

    def genus(self) -> int:
        twice = 1 + self.n - self.vertex_count()
        assert twice >= 0 and twice % 2 == 0, "non-integral genus"
        return twice // 2

    # -- symmetry ---------------------------------------------------------

    def rotate(self, k: int) -> "ChordDiagram":
        m = len(self._pairing)
        if m == 0:
            return self
        k %= m
        if k == 0:
            return self
        q = [0] * m
        for i, j in enumerate(self._pairing):
            q[(i + k) % m] = (j + k) % m
        return ChordDiagram(q)

    def is_invariant_under(self, k: int) -> bool:
        """True iff rotating by ``k`` leaves the diagram unchanged."""
        m = len(self._pairing)
        if m == 0:
            return True
        k %= m
        p = self._pairing
        return all(p[(i + k) % m] == (j + k) % m for i, j in enumerate(p))

    def symmetry_order(self) -> int:
        """Smallest positive rotation fixing the diagram (the minimal walk length)."""
        m = len(self._pairing)
        if m == 0:
            raise EmptyDiagram("symmetry order of the empty diagram is undefined")
        for d in _divisors(m):
            if self.is_invariant_under(d):
                return d
        raise AssertionError("unreachable: the full rotation is always a symmetry")

    def equivalent(self, other: "ChordDiagram") -> bool:
        if self.n != other.n:
            return False
        m = len(self._pairing)
        if m == 0:
            return True
        return any(self.rotate(k) == other for k in range(m))

    def canonical(self) -> "ChordDiagram":
        """Lexicographically smallest rotation, a representative of the equivalence class."""
        m = len(self._pairing)
        if m == 0:
            return self
        return min((self.rotate(k) for k in range(self.symmetry_order())),
                   key=lambda d: d._pairing)

    # -- editing ----------------------------------------------------------

    def insert_chord(self, pos_a: int, pos_b: int) -> "ChordDiagram":
        """Insert a new chord whose endpoints sit in gaps ``pos_a`` and ``pos_b``.

        Gap ``g`` is the space just before old endpoint ``g``; gap ``2n`` is
        after the last endpoint.  When both gaps coincide the new chord joins
        two neighbouring points.
        """
        m = len(self._pairing)
        for g in (pos_a, pos_b):
            if not 0 <= g <= m:
                raise GapOutOfRange(f"gap {g} outside 0..{m}")
        a, b = sorted((pos_a, pos_b))

        def shift(i):
            return i + (i >= a) + (i >= b)

        new = [0] * (m + 2)
        for i, j in enumerate(self._pairing):
            new[shift(i)] = shift(j)
        new[a], new[b + 1] = b + 1, a
        return ChordDiagram(new)

    # -- serialization ----------------------------------------------------

    def serialize(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.chords())

    def to_json(self) -> dict:
        return {"n": self.n, "chords": [[a, b] for a, b in self.chords()]}

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self._pairing == other._pairing

    def __hash__(self):
        return hash(self._pairing)

    def __repr__(self):
        return f"ChordDiagram.from_pairs({self.chords()!r})"

    def __str__(self):
        return self.serialize()

    def __setattr__(self, name, value):
        if name in ("_pairing",) and getattr(self, "_pairing", None) is not None:
            raise AttributeError("ChordDiagram is immutable")
        object.__setattr__(self, name, value)


def _divisors(m: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return small + large[::-1]


_CHORD_RE = re.compile(r"(\d+)-(\d+)")


def parse(text: str) -> ChordDiagram:
    """Parse the comma-separated ``a-b`` form, or the JSON object form.

    The text form is strict: no whitespace, ``a < b``, chords ordered by
    ascending ``a``.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    if text == "":
        return ChordDiagram.empty()
    pairs = []
    pos = 0
    for k, token in enumerate(text.split(",")):
        m = _CHORD_RE.fullmatch(token)
        if m is None:
            raise ParseError(f"expected 'a-b', got {token!r}", pos)
        a, b = int(m.group(1)), int(m.group(2))
        if a == b:
            raise ParseError(f"endpoint {a} paired with itself", pos, "SelfPaired")
        if a > b:
            raise ParseError(f"chord {token!r} must list the smaller endpoint first", pos, "Order")
        if pairs and a <= pairs[-1][0]:
            raise ParseError("chords must be ordered by ascending first endpoint", pos, "Order")
        pairs.append((a, b))
        pos += len(token) + 1
    try:
        return ChordDiagram.from_pairs(pairs)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(str(exc), 0, type(exc).__name__) from exc


def _parse_json(text: str) -> ChordDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from exc
    if not isinstance(obj, dict) or "chords" not in obj:
        raise ParseError("JSON diagram must be an object with a 'chords' list", 0)
    chords = obj["chords"]
    if "n" in obj and obj["n"] != len(chords):
        raise ParseError(f"'n' is {obj['n']} but {len(chords)} chords given", 0, "Count")
    for c in chords:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c)):
            raise ParseError(f"bad chord {c!r}", 0)
        if c[0] == c[1]:
            raise ParseError(f"endpoint {c[0]} paired with itself", 0, "SelfPaired")
    try:
        return ChordDiagram.from_pairs(chords)
    except Exception as exc:
        raise ParseError(str(exc), 0, type(exc).__name__) from exc


def from_pairs(pairs: Iterable[Sequence[int]]) -> ChordDiagram:
    return ChordDiagram.from_pairs(pairs)
