"""Tête-à-tête twists as (chord diagram, walk length) pairs.

A walk length ``l`` is admissible for a diagram exactly when rotating the
diagram by ``l`` positions leaves it unchanged.  The walk length is stored
unreduced: ``l`` and ``l + 2n`` give the same rotation but differ by boundary
Dehn twists, which matters for the open book.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, NamedTuple

from .diagram import ChordDiagram, _divisors, parse as parse_diagram
from .errors import CapExceeded, EmptyDiagram, NotASymmetry, ParseError
from .factory import elementary

MAX_ENUMERATION_CHORDS = 10
MAX_BOUNDS_GENUS = 200


@dataclass(frozen=True)
class TatTwist:
    diagram: ChordDiagram
    walk_length: int

    def __post_init__(self):
        d = self.diagram
        if d.n == 0:
            raise EmptyDiagram("a twist needs at least one chord")
        if not d.is_invariant_under(self.walk_length):
            raise NotASymmetry(
                f"walk length {self.walk_length} is not a rotational symmetry; "
                f"the minimal walk length is {d.symmetry_order()}",
                d.symmetry_order(),
            )

    @property
    def n(self) -> int:
        return self.diagram.n

    def order(self) -> int:
        return order(self)

    def power(self, k: int) -> "TatTwist":
        return power(self, k)

    def serialize(self) -> str:
        return f"{self.diagram.serialize()};l={self.walk_length}"

    def __str__(self):
        return self.serialize()


def new_twist(d: ChordDiagram, l: int) -> TatTwist:
    return TatTwist(d, l)


_TWIST_RE = re.compile(r"(.*);l=(-?\d+)")


def parse_twist(text: str) -> TatTwist:
    """Parse ``"<diagram text>;l=<integer>"``."""
    m = _TWIST_RE.fullmatch(text)
    if m is None:
        raise ParseError("expected '<diagram>;l=<integer>'", text.find(";") if ";" in text else len(text))
    return TatTwist(parse_diagram(m.group(1)), int(m.group(2)))


def order(t: TatTwist) -> int:
    """Order of the twist up to boundary Dehn twists: ``2n / gcd(l, 2n)``."""
    m = t.diagram.num_endpoints
    return m // gcd(t.walk_length % m, m)


def power(t: TatTwist, k: int) -> TatTwist:
    return TatTwist(t.diagram, k * t.walk_length)


class EdgeOrbit(NamedTuple):
    """Chord ids of one orbit, in the order the twist visits them.

    ``reversed`` is set when the first return of a chord to itself swaps its
    endpoints.
    """

    chords: tuple[int, ...]
    reversed: bool


def edge_orbits(t: TatTwist) -> list[EdgeOrbit]:
    d = t.diagram
    m = d.num_endpoints
    l = t.walk_length % m
    chords = d.chords()
    cid = {}
    for k, (a, b) in enumerate(chords):
        cid[a] = cid[b] = k
    seen = [False] * len(chords)
    orbits = []
    for start in range(len(chords)):
        if seen[start]:
            continue
        orbit = []
        a, b = chords[start]
        x = a
        while True:
            c = cid[x]
            if c == start and orbit:
                break
            seen[c] = True
            orbit.append(c)
            x = (x + l) % m
        orbits.append(EdgeOrbit(tuple(orbit), x == b and a != b))
    return orbits


def is_elementary(t: TatTwist) -> bool:
    return len(edge_orbits(t)) == 1


def vertex_permutation(t: TatTwist) -> tuple[int, ...]:
    """Induced permutation of vertex cycles: ``perm[k]`` is the image of cycle ``k``."""
    d = t.diagram
    m = d.num_endpoints
    cycles = d.vertex_cycles()
    where = cycles.index_of()
    perm = []
    for cyc in cycles:
        images = {where[(c + t.walk_length) % m] for c in cyc}
        assert len(images) == 1, "rotation does not preserve internal boundaries"
        perm.append(images.pop())
    return tuple(perm)


def permutation_cycle_type(perm) -> list[int]:
    """Sorted cycle lengths of a permutation given as an image tuple."""
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            k += 1
        lengths.append(k)
    return sorted(lengths)


def compose_permutation_power(perm, k: int) -> tuple[int, ...]:
    """``perm`` applied ``k`` times (``k`` may be negative)."""
    size = len(perm)
    if k < 0:
        inv = [0] * size
        for i, j in enumerate(perm):
            inv[j] = i
        perm, k = tuple(inv), -k
    result = list(range(size))
    for _ in range(k):
        result = [perm[x] for x in result]
    return tuple(result)


# -- elementary twists and order bounds -----------------------------------

def elementary_genus_scan_bound(g: int) -> int:
    # diameters: n <= 2g+1; subdivided diameters E_{2m,2m-1}: n <= 4g+2;
    # 3 <= a <= n-2: n <= 3g+3
    return max(4 * g + 2, 3 * g + 3)


def enumerate_elementary(g: int) -> list[tuple[int, int]]:
    """All ``(n, a)`` with ``genus(E_{n,a}) == g``, within the scan bound.

    Genus is computed by boundary traversal, not by the gcd formula.  The
    family ``E_{n,1}`` has genus 0 for every ``n``, so for ``g == 0`` only
    ``n`` up to the scan bound is listed.
    """
    out = []
    for n in range(1, elementary_genus_scan_bound(g) + 1):
        for a in list(range(1, n, 2)) + [n]:
            if elementary(n, a).genus() == g:
                out.append((n, a))
    return out


def predicted_max_order(g: int) -> int:
    """Largest order of ``T(E_{n,a}, 2)`` with ``3 <= a <= n-2`` in genus ``g``."""
    return 3 * g if g % 3 == 2 else 3 * g + 3


def predicted_maximizer(g: int) -> tuple[int, int]:
    r = g % 3
    if r == 0:
        return (3 * g + 3, 2 * g + 1)
    if r == 1:
        return (3 * g + 3, 2 * g + 3)
    return (3 * g, 2 * g - 1)


def order_bound_allows(g: int, order_: int) -> bool:
    """Whether an order is permitted for a one-boundary twist of genus ``g >= 1``."""
    return order_ in (4 * g + 2, 4 * g) or order_ <= predicted_max_order(g)


@dataclass
class OrderBoundsReport:
    genus: int
    max_order: int
    maximizers: list[tuple[int, int]]
    expected_max_order: int
    expected_maximizer: tuple[int, int]
    diameter_orders: dict[tuple[int, int], int]
    same_order_diameters: list[tuple[int, int]]
    brute_force_n: int | None = None
    brute_force_violations: list[tuple[str, int, int]] = field(default_factory=list)
    brute_force_twists: int = 0
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        g = self.genus
        out = [f"genus {g}: max elementary order {self.max_order} at "
               + ", ".join(f"E_{{{n},{a}}}" for n, a in self.maximizers)
               + f" (expected {self.expected_max_order})"]
        for (n, a), o in self.diameter_orders.items():
            out.append(f"genus {g}: E_{{{n},{a}}} with l=1 has order {o}")
        if self.same_order_diameters:
            out.append(f"genus {g}: diameter diagrams of the same maximal order: "
                       + ", ".join(f"E_{{{n},{a}}}" for n, a in self.same_order_diameters))
        if self.brute_force_n is not None:
            out.append(f"genus {g}: brute force n <= {self.brute_force_n}: "
                       f"{self.brute_force_twists} twists, {len(self.brute_force_violations)} violations")
        for name, ok in self.checks.items():
            out.append(f"{'PASS' if ok else 'FAIL'} {name}")
        return out


def verify_order_bounds(g: int, brute_force_n: int | None = None) -> OrderBoundsReport:
    """Check the order bounds for elementary twists of genus ``g``.

    Confirms that the maximum order of ``T(E_{n,a}, 2)`` with ``3 <= a <= n-2``
    is ``3g+3`` (``g = 0, 1 mod 3``) or ``3g`` (``g = 2 mod 3``), that the
    maximizer is unique from genus 4 on, and that diameter diagrams realize
    the orders ``4g+2`` and ``4g``.  With ``brute_force_n`` every symmetric
    diagram of genus ``g`` with at most that many chords is checked as well.
    """
    if not 2 <= g <= MAX_BOUNDS_GENUS:
        raise CapExceeded(f"genus {g} outside 2..{MAX_BOUNDS_GENUS}")
    best, argbest = 0, []
    for n in range(5, 3 * g + 4):
        for a in range(3, n - 1, 2):
            d = elementary(n, a)
            if d.genus() != g:
                continue
            o = order(TatTwist(d, 2))
            if o > best:
                best, argbest = o, [(n, a)]
            elif o == best:
                argbest.append((n, a))
    diam = {}
    for n in (2 * g, 2 * g + 1):
        d = elementary(n, n)
        assert d.genus() == g
        diam[(n, n)] = order(TatTwist(d, 1))
    report = OrderBoundsReport(
        genus=g,
        max_order=best,
        maximizers=argbest,
        expected_max_order=predicted_max_order(g),
        expected_maximizer=predicted_maximizer(g),
        diameter_orders=diam,
        same_order_diameters=[k for k, o in diam.items() if o == best],
    )
    report.checks["max order matches 3g+3 / 3g"] = best == report.expected_max_order
    report.checks["maximizer list contains the expected (n, a)"] = report.expected_maximizer in argbest
    if g >= 4:
        report.checks["maximizer unique for g >= 4"] = argbest == [report.expected_maximizer]
    report.checks["diameters realize 4g+2 and 4g"] = sorted(diam.values()) == [4 * g, 4 * g + 2]
    if brute_force_n is not None:
        report.brute_force_n = brute_force_n
        for n in range(1, brute_force_n + 1):
            for d in enumerate_symmetric_diagrams(n):
                if d.genus() != g:
                    continue
                for l in symmetric_walk_lengths(d):
                    report.brute_force_twists += 1
                    o = order(TatTwist(d, l))
                    if not order_bound_allows(g, o):
                        report.brute_force_violations.append((d.serialize(), l, o))
        report.checks["brute force obeys the order bound"] = not report.brute_force_violations
    return report


def symmetric_walk_lengths(d: ChordDiagram) -> range:
    """Walk lengths in ``1..2n`` admissible for ``d``."""
    s = d.symmetry_order()
    return range(s, d.num_endpoints + 1, s)


# -- exhaustive enumeration -----------------------------------------------

def enumerate_invariant_diagrams(n: int, l: int) -> Iterator[ChordDiagram]:
    """All labelled diagrams with ``n`` chords fixed by rotation by ``l``."""
    m = 2 * n
    if n == 0:
        yield ChordDiagram(())
        return
    l %= m
    if l == 0:
        l = m
    if m % l:
        l = gcd(l, m)
    steps = m // l
    pairing = [-1] * m

    def place(p, q):
        done = []
        for k in range(steps):
            a, b = (p + k * l) % m, (q + k * l) % m
            if a == b:
                break
            if pairing[a] == -1 and pairing[b] == -1:
                pairing[a], pairing[b] = b, a
                done.append((a, b))
            elif pairing[a] == b:
                continue
            else:
                break
        else:
            return done
        for a, b in done:
            pairing[a] = pairing[b] = -1
        return None

    def rec(start):
        p = start
        while p < m and pairing[p] != -1:
            p += 1
        if p == m:
            yield ChordDiagram(pairing)
            return
        for q in range(p + 1, m):
            if pairing[q] != -1:
                continue
            done = place(p, q)
            if done is None:
                continue
            yield from rec(p + 1)
            for a, b in done:
                pairing[a] = pairing[b] = -1

    yield from rec(0)


def enumerate_symmetric_diagrams(n: int) -> Iterator[ChordDiagram]:
    """Diagrams with ``n`` chords and a nontrivial rotational symmetry.

    Each rotation class is produced once, as its lexicographically smallest
    rotation, in increasing lexicographic order.
    """
    if n > MAX_ENUMERATION_CHORDS:
        raise CapExceeded(f"enumeration is capped at n <= {MAX_ENUMERATION_CHORDS}")
    if n < 1:
        return iter(())
    m = 2 * n
    primes = [p for p in range(2, m + 1) if m % p == 0 and all(p % r for r in range(2, p))]
    found = set()
    for p in primes:
        for d in enumerate_invariant_diagrams(n, m // p):
            found.add(d.canonical().pairing)
    return (ChordDiagram(p) for p in sorted(found))


def all_diagrams(n: int) -> Iterator[ChordDiagram]:
    """Every labelled diagram with ``n`` chords; there are (2n-1)!! of them."""
    yield from enumerate_invariant_diagrams(n, 2 * n)


def brute_force_order_check(nmax: int) -> dict[int, dict]:
    """Orders of all twists on symmetric diagrams with at most ``nmax`` chords.

    Returns, per genus, the set of orders seen and the violations of the order
    bound (genus >= 1 only; genus-0 twists are isotopic to the identity).
    """
    out: dict[int, dict] = {}
    for n in range(1, nmax + 1):
        for d in enumerate_symmetric_diagrams(n):
            g = d.genus()
            entry = out.setdefault(g, {"orders": set(), "violations": [], "twists": 0})
            for l in symmetric_walk_lengths(d):
                if l == d.num_endpoints:
                    continue
                o = order(TatTwist(d, l))
                entry["twists"] += 1
                entry["orders"].add(o)
                if g >= 1 and not order_bound_allows(g, o):
                    entry["violations"].append((d.serialize(), l, o))
    return out


__all__ = [
    "TatTwist",
    "EdgeOrbit",
    "OrderBoundsReport",
    "new_twist",
    "parse_twist",
    "order",
    "power",
    "edge_orbits",
    "is_elementary",
    "vertex_permutation",
    "permutation_cycle_type",
    "compose_permutation_power",
    "enumerate_elementary",
    "verify_order_bounds",
    "enumerate_symmetric_diagrams",
    "enumerate_invariant_diagrams",
    "all_diagrams",
    "brute_force_order_check",
    "symmetric_walk_lengths",
    "order_bound_allows",
    "predicted_max_order",
    "predicted_maximizer",
]
