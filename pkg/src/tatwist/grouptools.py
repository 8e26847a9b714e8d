"""Exact tools for finitely presented groups.

* :func:`abelianize` and :func:`smith_normal_form` give the abelianization,
  i.e. the first homology of the open book.
* :func:`todd_coxeter` runs a budgeted HLT coset enumeration over the trivial
  subgroup; when it closes, the number of live cosets is the group order.

Arithmetic is on Python integers.  Unless big integers are enabled (argument
``bigint=True`` or environment variable ``TAT_BIGINT=1``), any intermediate
value outside the signed 64-bit range raises :class:`Overflow`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import Overflow
from .fundgroup import GroupPresentation, open_book_presentation
from .twist import TatTwist

INT64_MAX = 2**63 - 1
DEFAULT_BUDGET = 1_000_000


# -- abelian invariants -----------------------------------------------------

@dataclass(frozen=True)
class AbelianGroupInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_orders(cls, free_rank: int, cyclic_orders: Sequence[int]) -> "AbelianGroupInvariants":
        """Invariant factors of ``Z^free_rank + Z/c1 + Z/c2 + ...`` for arbitrary ``c``."""
        k = len(cyclic_orders)
        diag = [[0] * k for _ in range(k)]
        for i, c in enumerate(cyclic_orders):
            diag[i][i] = c
        tors = smith_normal_form(np.array(diag, dtype=object).reshape(k, k)).torsion
        return cls(free_rank, tors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianize(p: GroupPresentation) -> np.ndarray:
    """Relation matrix: one row per relator, one column per generator."""
    m = np.zeros((len(p.relators), p.rank), dtype=np.int64)
    for r, w in enumerate(p.relators):
        for g, e in w:
            m[r, g] += e
    return m


def _bigint_default() -> bool:
    return os.environ.get("TAT_BIGINT", "") not in ("", "0")


def smith_normal_form(M, bigint: bool | None = None) -> AbelianGroupInvariants:
    """Invariants of the cokernel of the integer matrix ``M`` (rows = relations).

    Pivots are chosen as the entry of smallest absolute value in the remaining
    block, ties broken by lowest row then lowest column.
    """
    if bigint is None:
        bigint = _bigint_default()
    arr = np.asarray(M, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    nrows, ncols = arr.shape
    a = [[int(x) for x in row] for row in arr.tolist()]
    if not bigint:
        for row in a:
            for x in row:
                if abs(x) > INT64_MAX:
                    raise Overflow(f"input entry {x} exceeds 64 bits")

    def check(row):
        if not bigint:
            for x in row:
                if x > INT64_MAX or -x > INT64_MAX:
                    raise Overflow("intermediate value exceeds 64 bits; set TAT_BIGINT=1")

    diag = []
    t = 0
    while t < min(nrows, ncols):
        # smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            done = True
            # clear column t
            for i in range(t + 1, nrows):
                x = a[i][t]
                if x:
                    q = x // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, ncols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                        check(ri)
                    if a[i][t]:
                        done = False
            # clear row t
            rt = a[t]
            for j in range(t + 1, ncols):
                x = rt[j]
                if x:
                    q = x // piv
                    if q:
                        for row in a[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                        if not bigint:
                            for row in a[t:]:
                                if abs(row[j]) > INT64_MAX:
                                    raise Overflow("intermediate value exceeds 64 bits; set TAT_BIGINT=1")
                    if rt[j]:
                        done = False
            if done:
                # divisibility: pivot must divide the rest of the block
                bad = None
                for i in range(t + 1, nrows):
                    for j in range(t + 1, ncols):
                        if a[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                ri, rt = a[bad], a[t]
                for j in range(t, ncols):
                    rt[j] += ri[j]
                check(rt)
                continue
            # a remainder survived: move the smallest nonzero entry of row/col t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    rank = len(diag)
    torsion = sorted(d for d in diag if d != 1)
    return AbelianGroupInvariants(ncols - rank, tuple(torsion))


def homology_of_open_book(t: TatTwist, bigint: bool | None = None) -> AbelianGroupInvariants:
    return smith_normal_form(abelianize(open_book_presentation(t)), bigint=bigint)


# -- coset enumeration ----------------------------------------------------------

@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of :func:`todd_coxeter`.

    ``order`` is set only when the enumeration closed; ``cosets_used`` is the
    number of cosets defined along the way.
    """

    finite: bool
    order: int | None
    cosets_used: int

    def __str__(self):
        if self.finite:
            return f"finite, order {self.order}"
        return f"budget exceeded ({self.cosets_used} cosets)"


class _BudgetExceeded(Exception):
    pass


@dataclass
class _CosetTable:
    ncols: int
    budget: int
    table: list = field(default_factory=list)
    parent: list = field(default_factory=list)
    queue: list = field(default_factory=list)
    live: int = 0

    def new_coset(self):
        if len(self.table) >= self.budget:
            raise _BudgetExceeded
        self.table.append([-1] * self.ncols)
        self.parent.append(len(self.parent))
        self.live += 1
        return len(self.table) - 1

    def rep(self, c):
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def merge(self, a, b):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            a, b = min(a, b), max(a, b)
            self.parent[b] = a
            self.queue.append(b)
            self.live -= 1

    def coincidence(self, a, b):
        table = self.table
        self.queue = []
        self.merge(a, b)
        i = 0
        q = self.queue
        while i < len(q):
            g = q[i]
            i += 1
            row = table[g]
            for x in range(self.ncols):
                d = row[x]
                if d < 0:
                    continue
                xi = x ^ 1
                table[d][xi] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self.merge(nu, table[mu][x])
                elif table[nu][xi] >= 0:
                    self.merge(mu, table[nu][xi])
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def alive(self, c):
        return self.parent[c] == c

    def scan_and_fill(self, c, word):
        table = self.table
        f, i = c, 0
        b, j = c, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i:
                nxt = table[b][word[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            d = self.new_coset()
            table[f][word[i]] = d
            table[d][word[i] ^ 1] = f


def _letters(p: GroupPresentation) -> list[list[int]]:
    # generator g uses column 2g, its inverse column 2g+1
    words = []
    for w in p.relators:
        cols = []
        for g, e in w:
            col = 2 * g if e > 0 else 2 * g + 1
            cols.extend([col] * abs(e))
        if cols:
            words.append(cols)
    return words


def todd_coxeter(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> EnumerationResult:
    """Enumerate the cosets of the trivial subgroup, defining at most ``budget`` cosets.

    Cosets are processed in order; each live coset is scanned under every
    relator (defining new cosets to complete the scan) and then its row is
    filled.  A closed table certifies the group order.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    words = _letters(p)
    ct = _CosetTable(2 * p.rank, budget)
    try:
        ct.new_coset()
        c = 0
        while c < len(ct.table):
            if ct.alive(c):
                for w in words:
                    ct.scan_and_fill(c, w)
                    if not ct.alive(c):
                        break
                if ct.alive(c):
                    row = ct.table[c]
                    for x in range(ct.ncols):
                        if row[x] < 0:
                            d = ct.new_coset()
                            row[x] = d
                            ct.table[d][x ^ 1] = c
            c += 1
    except _BudgetExceeded:
        return EnumerationResult(False, None, len(ct.table))
    return EnumerationResult(True, ct.live, len(ct.table))


def group_order(t: TatTwist, budget: int = DEFAULT_BUDGET) -> EnumerationResult:
    return todd_coxeter(open_book_presentation(t), budget)
