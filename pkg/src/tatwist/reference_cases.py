"""Published open-book computations for elementary twists.

Each case is ``T(E_{n,a}, l)`` with the first homology written as a free rank
plus a list of cyclic orders (not necessarily invariant factors), and the
order of the fundamental group where it is known: an integer, ``INFINITE``,
or ``None`` when undecided.  Cases with ``n >= 52`` are marked deep.
"""

from __future__ import annotations

from dataclasses import dataclass

INFINITE = "infinite"


@dataclass(frozen=True)
class Case:
    n: int
    a: int
    l: int
    free_rank: int
    cyclic: tuple[int, ...]
    pi1_order: int | str | None = None

    @property
    def deep(self) -> bool:
        return self.n >= 52

    @property
    def name(self) -> str:
        return f"E_{{{self.n},{self.a}}} l={self.l}"


def _row(n, a, entries):
    return [Case(n, a, l, fr, tuple(cyc), pi) for l, fr, cyc, pi in entries]


CASES: list[Case] = (
    _row(2, 2, [
        (1, 0, [2], 2),
        (2, 0, [2, 2], 8),
        (3, 0, [2], 48),
        (4, 2, [], INFINITE),
        (5, 0, [2], None),
    ])
    + _row(3, 3, [
        (1, 0, [], 1),
        (2, 0, [3], 3),
        (3, 0, [2, 2], 8),
        (4, 0, [3], 24),
        (5, 0, [], 120),
        (6, 2, [], INFINITE),
    ])
    + _row(5, 3, [
        (2, 0, [5], 5),
        (4, 0, [5], None),
        (6, 0, [5], None),
        (8, 0, [5], None),
        (10, 4, [], INFINITE),
    ])
    + _row(6, 3, [
        (2, 0, [3], 3),
        (4, 0, [3, 3], None),
        (6, 2, [], INFINITE),
        (8, 0, [3, 3], None),
        (10, 0, [3], None),
        (12, 4, [], INFINITE),
    ])
    + _row(7, 3, [(2, 0, [7], 7)] + [(2 * k, 0, [7], None) for k in range(2, 7)]
           + [(14, 6, [], INFINITE)])
    + _row(7, 5, [(2, 0, [7], 7)] + [(2 * k, 0, [7], None) for k in range(2, 7)]
           + [(14, 6, [], INFINITE)])
    + _row(12, 7, [
        (2, 0, [], 1),
        (4, 0, [3], 8),
        (6, 0, [4, 4], None),
        (8, 0, [3, 3, 3], None),
        (10, 0, [], None),
        (12, 2, [2, 2], INFINITE),
        (14, 0, [], None),
        (16, 0, [3, 3, 3], None),
        (18, 0, [4, 4], None),
        (20, 0, [3], None),
        (22, 0, [], None),
        (24, 6, [], INFINITE),
    ])
    + _row(12, 11, [(2, 0, [2], 2), (4, 0, [2, 2], 24)])
    + _row(12, 5, [(2, 0, [2], 2), (4, 0, [2, 2, 3], None)])
    + _row(12, 3, [(2, 0, [6], 6)])
    + _row(60, 19, [(2, 0, [2], 2), (4, 0, [2, 2, 3], None)])
    + _row(52, 13, [(2, 0, [26], 26), (4, 0, [2, 2, 13, 13], None)])
    + _row(120, 119, [(2, 0, [2], 2), (4, 0, [2, 2], 240), (6, 0, [2, 2, 2], None)])
    + _row(120, 59, [(2, 0, [4], 4)])
    + _row(120, 5, [(2, 0, [20], 20), (4, 0, [3, 4, 4, 5, 5], None)])
)

# rows built on graphs with more than one boundary component; no chord diagram exists
MULTI_BOUNDARY_ROWS = ("(i)", "(ii)", "(iii)")


def default_cases() -> list[Case]:
    return [c for c in CASES if not c.deep]


def deep_cases() -> list[Case]:
    return [c for c in CASES if c.deep]
