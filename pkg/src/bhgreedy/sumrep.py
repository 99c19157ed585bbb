"""Incremental multiset-sum tables for a set of distinct positive integers.

For a set A and an order h >= 2 we maintain, for every j in 0..h,

    tables[j] : sum value -> number of size-j multisets of A with that sum.

tables[h] is the h-fold representation function r_A: r_A(x) counts the
multisets {a_1 <= ... <= a_h} drawn from A (repetition allowed) with
a_1 + ... + a_h = x.  Because the elements of A are distinct, this equals
counting index-non-decreasing h-tuples, which is the counting convention
used everywhere in this package.

Inserting a new element never recomputes anything from scratch: a size-j
multiset that uses the new element a with multiplicity k >= 1 is a size-(j-k)
multiset of the old set shifted by k*a, so

    tables[j][y + k*a] += old_tables[j-k][y]    for k = 1..j,

and processing j downward from h guarantees that every lower table read is
still the pre-insertion snapshot.  All counts are exact Python integers;
entries are only ever created with a positive count and no operation
decrements one.

``brute_force_rep`` is the independent oracle: it enumerates multisets
directly and deliberately shares nothing with SumTableSet.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import GuardExceeded

#: Cap on the total number of stored (sum, count) entries across all tables.
DEFAULT_MAX_ENTRIES = 50_000_000

#: Cap on the number of multisets a brute-force enumeration may visit.
DEFAULT_MAX_ENUMERATION = 5_000_000


@dataclass(frozen=True)
class RepProfile:
    """Level counts R_s = |{x : r(x) >= s}| for s = 1..len(counts).

    counts is non-increasing: a sum with multiplicity >= s also has
    multiplicity >= s-1.
    """

    counts: tuple[int, ...]

    def level(self, s: int) -> int:
        if not 1 <= s <= len(self.counts):
            raise IndexError(f"level {s} outside 1..{len(self.counts)}")
        return self.counts[s - 1]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class CandidateDelta:
    """Representation counts a candidate element m would add.

    added[x] is the number of size-h multisets of A + {m} that use m at
    least once and sum to x.  Multisets using m exactly k times correspond
    to size-(h-k) multisets of A at x - k*m, so

        added[x] = sum over k = 1..h of tables[h-k][x - k*m],

    where the k = h term contributes exactly 1 at x = h*m.
    """

    m: int
    added: dict[int, int]


class SumTableSet:
    """Exact j-fold multiset-sum counts of a growing set, j = 0..h.

    Single-writer: ``add_element`` needs exclusive access, while a frozen
    instance may be read from any number of threads concurrently (all
    queries are pure dict reads).
    """

    __slots__ = ("h", "tables", "elements", "_members", "max_entries", "_entries")

    def __init__(self, h: int, max_entries: int = DEFAULT_MAX_ENTRIES):
        if h < 2:
            raise ValueError(f"order h must be >= 2, got {h}")
        self.h = h
        self.tables: list[dict[int, int]] = [{} for _ in range(h + 1)]
        self.tables[0][0] = 1
        self.elements: list[int] = []
        self._members: set[int] = set()
        self.max_entries = max_entries
        self._entries = 1

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a in self._members

    def __repr__(self) -> str:
        return f"SumTableSet(h={self.h}, elements={self.elements})"

    def add_element(self, a: int) -> None:
        """Insert a new element, updating every table in place.

        Raises GuardExceeded when the entry cap is hit; the instance must
        be discarded afterwards (the update is not rolled back).
        """
        if a < 1:
            raise ValueError(f"elements must be positive, got {a}")
        if a in self._members:
            raise ValueError(f"duplicate element {a}")
        tables = self.tables
        for j in range(self.h, 0, -1):
            tj = tables[j]
            new_entries = 0
            for k in range(1, j + 1):
                ka = k * a
                for y, c in tables[j - k].items():
                    x = y + ka
                    prev = tj.get(x)
                    if prev is None:
                        tj[x] = c
                        new_entries += 1
                    else:
                        tj[x] = prev + c
            self._entries += new_entries
            if self._entries > self.max_entries:
                raise GuardExceeded(
                    f"sum-table entry cap {self.max_entries} exceeded while "
                    f"inserting {a}; lower n_terms or h, or raise the cap"
                )
        insort(self.elements, a)
        self._members.add(a)

    def rep_count(self, x: int) -> int:
        """r(x): multiplicity of x as an h-fold multiset sum."""
        return self.tables[self.h].get(x, 0)

    def rep_histogram(self, s_max: int) -> RepProfile:
        """Level counts R_1..R_{s_max} of the current set."""
        if s_max < 1:
            raise ValueError(f"s_max must be >= 1, got {s_max}")
        counts = [0] * s_max
        for c in self.tables[self.h].values():
            for s in range(min(c, s_max)):
                counts[s] += 1
        return RepProfile(tuple(counts))

    def candidate_delta(self, m: int) -> CandidateDelta:
        """Representation counts that inserting m would add (m not in A)."""
        if m < 1:
            raise ValueError(f"candidates must be positive, got {m}")
        if m in self._members:
            raise ValueError(f"{m} is already in the set")
        added: dict[int, int] = {}
        for k in range(1, self.h + 1):
            km = k * m
            for y, c in self.tables[self.h - k].items():
                x = km + y
                added[x] = added.get(x, 0) + c
        return CandidateDelta(m, added)

    def entry_count(self) -> int:
        """Total stored (sum, count) entries, the quantity the cap guards."""
        return self._entries


def brute_force_rep(
    A,
    h: int,
    x: int,
    max_enumeration: int = DEFAULT_MAX_ENUMERATION,
) -> int:
    """Count size-h multisets of A summing to x by full enumeration.

    Deliberately ignorant of SumTableSet; this is the oracle the
    incremental tables are checked against.
    """
    elems = sorted(A)
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    total = comb(len(elems) + h - 1, h)
    if total > max_enumeration:
        raise GuardExceeded(
            f"enumeration of {total} multisets exceeds cap {max_enumeration}"
        )
    return sum(1 for combo in combinations_with_replacement(elems, h) if sum(combo) == x)
