"""Constructors for chord-diagram families and the equivalence moves.

Random diagrams use :class:`random.Random` (MT19937) seeded with the given
integer, so output is reproducible across platforms and Python versions.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Iterable

from .diagram import ChordDiagram
from .errors import (
    ChordIdOutOfRange,
    InvalidParameters,
    InvalidSymmetry,
    NotANeighbourChord,
    NotCoprime,
    ParameterTooSmall,
    Unsatisfiable,
)

RANDOM_SYMMETRIC_RETRIES = 10_000


def elementary(n: int, a: int) -> ChordDiagram:
    """The elementary diagram ``E_{n,a}``: ``n`` chords, all of length ``a``.

    For ``a == n`` every chord is a diameter ``{i, i+n}``; otherwise ``a`` must
    be odd and the chords are ``{2k, 2k+a}`` (mod ``2n``), which also produces
    the chords ``{2k+1, 2k+1-a}``.
    """
    if n < 1 or a < 1 or a > n:
        raise InvalidParameters(f"need 1 <= a <= n, got n={n}, a={a}")
    m = 2 * n
    if a == n:
        return ChordDiagram([(i + n) % m for i in range(m)])
    if a % 2 == 0:
        raise InvalidParameters(f"chord length a={a} < n must be odd")
    return ChordDiagram.from_pairs(((2 * k) % m, (2 * k + a) % m) for k in range(n))


def torus_knot(p: int, q: int) -> tuple[ChordDiagram, int]:
    """Chord diagram and walk length of the ``(p, q)``-torus knot monodromy.

    The diagram is ``E_{pq, a}`` with ``a = 2mp - 1`` where ``m`` is the inverse
    of ``p`` modulo ``q`` (taking ``p < q``), replaced by ``2pq - a`` when that
    is shorter.  The walk length is always 2.
    """
    if p < 2 or q < 2:
        raise ParameterTooSmall(f"need p, q >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}: this is a link, not a knot")
    p, q = min(p, q), max(p, q)
    m = _inverse_mod(p, q)
    a0 = 2 * m * p - 1
    a = min(a0, 2 * p * q - a0)
    return elementary(p * q, a), 2


def _inverse_mod(x: int, mod: int) -> int:
    # extended Euclid; result in 1..mod-1
    r0, r1, s0, s1 = mod, x % mod, 0, 1
    while r1:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    if r0 != 1:
        raise NotCoprime(f"{x} is not invertible modulo {mod}")
    return s0 % mod


def parallel_duplicate(d: ChordDiagram) -> ChordDiagram:
    """Replace every chord by two parallel chords (subdivide every edge once).

    Endpoint ``i`` becomes ``2i, 2i+1`` and chord ``{i, j}`` becomes
    ``{2i, 2j+1}`` and ``{2i+1, 2j}``.  A walk length ``l`` on ``d`` becomes
    ``2l`` on the result.
    """
    new = [0] * (2 * d.num_endpoints)
    for i, j in enumerate(d.pairing):
        new[2 * i] = 2 * j + 1
        new[2 * i + 1] = 2 * j
    return ChordDiagram(new)


def delete_neighbour_chords(d: ChordDiagram, chords: Iterable[int]) -> ChordDiagram:
    """Remove chords joining neighbouring endpoints, keeping the cyclic order.

    ``chords`` are chord ids, i.e. positions in :meth:`ChordDiagram.chords`.
    """
    ids = set(chords)
    if not ids:
        return d
    all_chords = d.chords()
    m = d.num_endpoints
    drop = set()
    for c in ids:
        if not 0 <= c < len(all_chords):
            raise ChordIdOutOfRange(f"chord id {c} outside 0..{len(all_chords) - 1}")
        a, b = all_chords[c]
        if (a + 1) % m != b and (b + 1) % m != a:
            raise NotANeighbourChord(f"chord {a}-{b} does not join neighbouring points")
        drop.update((a, b))
    keep = [i for i in range(m) if i not in drop]
    relabel = {old: new for new, old in enumerate(keep)}
    return ChordDiagram([relabel[d.pairing[i]] for i in keep])


def insert_neighbour_chord(d: ChordDiagram, gap: int) -> ChordDiagram:
    """Insert a chord joining two new adjacent points in ``gap``."""
    return d.insert_chord(gap, gap)


def random_diagram(n: int, seed: int) -> ChordDiagram:
    """A uniformly random diagram with ``n`` chords."""
    if n < 0:
        raise InvalidParameters(f"n must be nonnegative, got {n}")
    rng = random.Random(seed)
    points = list(range(2 * n))
    rng.shuffle(points)
    return ChordDiagram.from_pairs(zip(points[::2], points[1::2]))


def random_symmetric(n: int, l: int, seed: int) -> ChordDiagram:
    """A random diagram with ``n`` chords invariant under rotation by ``l``.

    Chords are chosen orbit by orbit under the rotation: the smallest
    unmatched point receives a random partner among those whose rotation
    orbit is compatible with what is already placed.  A sample that runs out
    of compatible partners is rejected and redrawn.
    """
    m = 2 * n
    if n < 1 or l < 1 or m % l:
        raise InvalidSymmetry(f"walk length {l} does not divide {m}")
    rng = random.Random(seed)
    steps = m // l
    for _ in range(RANDOM_SYMMETRIC_RETRIES):
        pairing = [-1] * m
        stuck = False
        for p in range(m):
            if pairing[p] != -1:
                continue
            options = [q for q in range(m)
                       if q != p and pairing[q] == -1 and _orbit_fits(pairing, p, q, l, steps)]
            if not options:
                stuck = True
                break
            q = rng.choice(options)
            for k in range(steps):
                a, b = (p + k * l) % m, (q + k * l) % m
                pairing[a], pairing[b] = b, a
        if not stuck:
            return ChordDiagram(pairing)
    raise Unsatisfiable(f"no {l}-symmetric diagram found after {RANDOM_SYMMETRIC_RETRIES} tries")


def _orbit_fits(pairing, p, q, l, steps):
    m = len(pairing)
    placed = {}
    for k in range(steps):
        a, b = (p + k * l) % m, (q + k * l) % m
        if a == b:
            return False
        for x, y in ((a, b), (b, a)):
            if pairing[x] != -1 or placed.get(x, y) != y:
                return False
            placed[x] = y
    return True
