"""Presentations of the fundamental group of the open book of a twist.

Generators are one loop ``g<i>`` per chord, labelled by the chord's smaller
endpoint ``i``, followed by ``om``, the loop once around the annulus.  The
basepoint sits in the gap between endpoints ``2n-1`` and ``0``.

Relators come in two groups:

* one boundary relator per internal boundary (vertex cycle), read off while
  walking along it, with ``om`` inserted where the walk passes the basepoint;
* one mapping relator per chord, identifying ``g_i`` with its image under the
  twist.  The image of the chord ``{i, j}`` is ``{i+l, j+l}``, conjugated by
  ``om`` powers that count how often each endpoint was rotated past the
  basepoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .twist import TatTwist

Letter = tuple[int, int]
Word = tuple[Letter, ...]

GEN_PREFIX = "g"
GEN_OMEGA = "om"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        k = len(self.generators)
        for w in self.relators:
            for g, e in w:
                if not 0 <= g < k:
                    raise ValueError(f"relator uses generator index {g} outside 0..{k - 1}")
                if e == 0:
                    raise ValueError("relator letters must have nonzero exponents")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def word_str(self, w: Word) -> str:
        return word_to_str(w, self.generators)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[self.generators[g], e] for g, e in w] for w in self.relators],
        }

    def relabel(self, perm) -> "GroupPresentation":
        """Presentation with generator ``k`` renamed to position ``perm[k]``."""
        gens = [None] * len(self.generators)
        for k, name in enumerate(self.generators):
            gens[perm[k]] = name
        rels = tuple(tuple((perm[g], e) for g, e in w) for w in self.relators)
        return GroupPresentation(tuple(gens), rels)


def word_to_str(w: Word, names) -> str:
    if not w:
        return "One(F)"
    parts = []
    for g, e in w:
        parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
    return "*".join(parts)


def _append(word: list, gen: int, exp: int) -> None:
    if exp:
        word.append((gen, exp))


def chord_generators(t: TatTwist) -> dict[int, int]:
    """Map from a chord's smaller endpoint to its generator index."""
    lows = [i for i, j in enumerate(t.diagram.pairing) if i < j]
    return {i: k for k, i in enumerate(lows)}


def boundary_relators(t: TatTwist) -> list[Word]:
    d = t.diagram
    m = d.num_endpoints
    gen = chord_generators(t)
    om = len(gen)
    rels = []
    for cycle in d.vertex_cycles():
        w: list = []
        for end in cycle:
            start = d.opposite(end)
            if start < end:
                _append(w, gen[start], 1)
            else:
                _append(w, gen[end], -1)
            if end == m - 1:
                _append(w, om, 1)
        rels.append(tuple(w))
    return rels


def mapping_relators(t: TatTwist) -> list[Word]:
    d = t.diagram
    m = d.num_endpoints
    l = t.walk_length
    gen = chord_generators(t)
    om = len(gen)
    rels = []
    for i in range(m):
        j = d.opposite(i)
        if i > j:
            continue
        new_i, new_j = (i + l) % m, (j + l) % m
        rot_i, rot_j = (i + l) // m, (j + l) // m  # floor division, also for l < 0
        w: list = []
        _append(w, om, rot_i)
        if new_i < new_j:
            _append(w, gen[new_i], 1)
        else:
            _append(w, gen[new_j], -1)
        _append(w, om, -rot_j)
        _append(w, gen[i], -1)
        rels.append(tuple(w))
    return rels


def open_book_presentation(t: TatTwist) -> GroupPresentation:
    """Presentation of the fundamental group of the open book of ``t``.

    Boundary relators come first (in vertex-cycle order), then one mapping
    relator per chord (by smaller endpoint).
    """
    gens = tuple(f"{GEN_PREFIX}{i}" for i in chord_generators(t)) + (GEN_OMEGA,)
    return GroupPresentation(gens, tuple(boundary_relators(t) + mapping_relators(t)))


def to_gap_text(p: GroupPresentation) -> str:
    """GAP code defining the presented group as ``G``."""
    names = p.generators
    if names:
        decl = "F := FreeGroup(" + ",".join(f'"{s}"' for s in names) + ");"
    else:
        decl = "F := FreeGroup(0);"
    lines = [decl]
    lines += [f"{name} := F.{k + 1};" for k, name in enumerate(names)]
    if p.relators:
        lines.append("rels := [ " + ", ".join(word_to_str(w, names) for w in p.relators) + " ];")
    else:
        lines.append("rels := [ ];")
    lines.append("G := F / rels;")
    return "\n".join(lines) + "\n"


def to_json_text(p: GroupPresentation) -> str:
    return json.dumps(p.to_json())
