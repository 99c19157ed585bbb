"""Greedy generators for B_h[g] sequences.

A set of positive integers is B_h[g] when every integer has at most g
representations as a sum of h elements (repetition allowed, order ignored).
Two generators live here:

``classic_greedy``
    a_1 = 1; each next term is the smallest integer greater than the last
    that keeps the set B_h[g].  The output is strictly increasing.

``strong_greedy``
    a_1 = 1; each next term is the smallest positive integer, distinct from
    all previous terms, that keeps the set B_h[g] *and* keeps every level
    count R_s = |{x : r(x) >= s}| within n^(h+(1-s)(h-1)/g) for s = 1..g,
    where n is the size of the new set.  Sets maintained this way admit the
    proven per-index ceiling a_n <= 2g * n^(h+(h-1)/g), which the generator
    uses as its scan ceiling and asserts at every step.

Every comparison against a fractional-exponent quantity is decided exactly
by raising both sides to the g-th power in arbitrary-precision integer
arithmetic.  No floating point is used anywhere in generation.
"""

from __future__ import annotations

import time
from bisect import bisect_left, bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import ScanExceededBound, ScanExceededConfiguredLimit
from .sumrep import DEFAULT_MAX_ENTRIES, CandidateDelta, RepProfile, SumTableSet

ALGORITHM_CLASSIC = "classic"
ALGORITHM_STRONG = "strong"


@dataclass(frozen=True)
class Params:
    """Generation parameters: order h >= 2, multiplicity bound g >= 1, and
    the number of terms to produce."""

    h: int
    g: int
    n_terms: int

    def __post_init__(self):
        if self.h < 2:
            raise ValueError(f"h must be >= 2, got {self.h}")
        if self.g < 1:
            raise ValueError(f"g must be >= 1, got {self.g}")
        if self.n_terms < 1:
            raise ValueError(f"n_terms must be >= 1, got {self.n_terms}")


@dataclass(frozen=True)
class StepMeta:
    """Per-step generation metadata.

    scan_length counts the candidates a sequential scan tests before
    accepting (members of the set are skipped, not counted); it is defined
    that way so the number is independent of the worker count.  elapsed is
    wall-clock seconds and is excluded from canonical serializations.
    """

    n: int
    term: int
    scan_length: int
    bound_floor: int
    elapsed: float


@dataclass
class SequenceRecord:
    """A generated sequence with its per-step metadata, in generation order."""

    params: Params
    algorithm: str
    terms: list[int] = field(default_factory=list)
    per_step: list[StepMeta] = field(default_factory=list)

    @property
    def is_sorted(self) -> bool:
        return all(a < b for a, b in zip(self.terms, self.terms[1:]))


def int_nth_root(x: int, k: int) -> int:
    """Largest r >= 0 with r**k <= x, in pure integer arithmetic."""
    if x < 0:
        raise ValueError("negative radicand")
    if k < 1:
        raise ValueError("root order must be >= 1")
    if k == 1 or x < 2:
        return x
    # Newton iteration from an over-estimate converges down to the floor.
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def threshold_leq(count: int, n: int, h: int, g: int, s: int) -> bool:
    """Exact test of count <= n^(h + (1-s)(h-1)/g).

    Raising both sides to the g-th power leaves only integer exponents:
    count^g <= n^(h*g + (1-s)(h-1)).  The comparison is inclusive, so a
    count exactly on the ceiling is admitted.
    """
    if not 1 <= s <= g:
        raise ValueError(f"level s must satisfy 1 <= s <= g, got s={s}, g={g}")
    return count ** g <= n ** (h * g + (1 - s) * (h - 1))


@dataclass(frozen=True)
class Threshold:
    """The level ceiling n^(e_num/g) with integer numerator e_num.

    For level s of a strong B_h[g] set of size n, e_num = h*g + (1-s)(h-1),
    which is always >= h + g - 1 >= 2.
    """

    n: int
    e_num: int
    g: int

    @classmethod
    def for_level(cls, n: int, h: int, g: int, s: int) -> "Threshold":
        if not 1 <= s <= g:
            raise ValueError(f"level s must satisfy 1 <= s <= g, got s={s}, g={g}")
        return cls(n, h * g + (1 - s) * (h - 1), g)

    def admits(self, count: int) -> bool:
        return count ** self.g <= self.n ** self.e_num

    @property
    def floor(self) -> int:
        """Largest integer admitted by the ceiling."""
        return int_nth_root(self.n ** self.e_num, self.g)


@dataclass(frozen=True)
class TheoremBound:
    """The per-index ceiling 2g * n^(h+(h-1)/g) on the n-th strong term.

    rhs_pow is the exact g-th power of the ceiling, (2g)^g * n^(hg+h-1);
    admits(value) decides value <= ceiling via value^g <= rhs_pow, and
    floor is the largest admitted integer (used as a scan ceiling).
    """

    n: int
    h: int
    g: int
    rhs_pow: int
    floor: int

    def admits(self, value: int) -> bool:
        return value ** self.g <= self.rhs_pow


def theorem_bound(n: int, h: int, g: int) -> TheoremBound:
    """Exact ceiling object for the n-th strong-greedy term."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rhs_pow = (2 * g) ** g * n ** (h * g + h - 1)
    return TheoremBound(n, h, g, rhs_pow, int_nth_root(rhs_pow, g))


@dataclass(frozen=True)
class CandidateVerdict:
    """Outcome of testing one candidate against the strong-set conditions.

    reason "bhg" means the candidate pushes some sum's multiplicity past g
    (x is a witness); reason "level" means some level count R_s would
    exceed its ceiling (s is the smallest failing level).
    """

    accepted: bool
    reason: Optional[str] = None
    s: Optional[int] = None
    x: Optional[int] = None


def is_strong_candidate(
    t: SumTableSet,
    delta: CandidateDelta,
    n_next: int,
    h: int,
    g: int,
    profile: Optional[RepProfile] = None,
) -> CandidateVerdict:
    """Decide whether adding delta.m keeps t's set a strong B_h[g] set of
    size n_next.

    profile, when given, must be t.rep_histogram(g) for the current set;
    passing it avoids recomputing the histogram for every candidate of a
    scan.  Level counts of the enlarged set are obtained by adjusting the
    profile with the delta: a sum x moves into level s exactly when
    r(x) < s <= r(x) + added[x].
    """
    th = t.tables[h]
    for x, add in delta.added.items():
        if th.get(x, 0) + add > g:
            return CandidateVerdict(False, reason="bhg", x=x)
    if profile is None:
        profile = t.rep_histogram(g)
    gains = [0] * (g + 2)
    for x, add in delta.added.items():
        lo = th.get(x, 0)
        for s in range(lo + 1, min(lo + add, g) + 1):
            gains[s] += 1
    for s in range(1, g + 1):
        if not threshold_leq(profile.level(s) + gains[s], n_next, h, g, s):
            return CandidateVerdict(False, reason="level", s=s)
    return CandidateVerdict(True)


def _accept_g1(t: SumTableSet) -> Callable[[int], bool]:
    """Candidate test specialized to g = 1.

    In a B_h[1] set every multiset sum is unique, so every table below h
    also has all-1 counts, and a candidate is admissible iff the sums it
    creates are fresh and pairwise distinct.  The level-1 ceiling n^h can
    never reject: there are at most C(n+h-1, h) <= n^h distinct sums, so
    for g = 1 the strong rule coincides with the plain B_h condition.
    """
    h = t.h
    old = set(t.tables[h])
    lowers = [(k, list(t.tables[h - k])) for k in range(1, h + 1)]

    def accept(m: int) -> bool:
        seen = set()
        for k, keys in lowers:
            km = k * m
            for y in keys:
                x = km + y
                if x in old or x in seen:
                    return False
                seen.add(x)
        return True

    return accept


def _accept_general(
    t: SumTableSet, g: int, n_next: int, check_levels: bool
) -> Callable[[int], bool]:
    """Candidate test for general g, fused for the scan hot path.

    Tracks exact multiplicities with an early abort on the first sum pushed
    past g; with check_levels it then applies the level ceilings against
    the cached profile of the current set.  Behaviour is identical to
    candidate_delta + is_strong_candidate (property-tested), just without
    materializing a CandidateDelta per candidate.
    """
    h = t.h
    th = t.tables[h]
    lowers = [(k, t.tables[h - k]) for k in range(1, h + 1)]
    if check_levels:
        base = t.rep_histogram(g).counts
        thresholds = [Threshold.for_level(n_next, t.h, g, s) for s in range(1, g + 1)]

    def accept(m: int) -> bool:
        added: dict[int, int] = {}
        for k, tab in lowers:
            km = k * m
            for y, c in tab.items():
                x = km + y
                nc = added.get(x, 0) + c
                if th.get(x, 0) + nc > g:
                    return False
                added[x] = nc
        if check_levels:
            gains = [0] * (g + 2)
            for x, add in added.items():
                lo = th.get(x, 0)
                for s in range(lo + 1, min(lo + add, g) + 1):
                    gains[s] += 1
            for s in range(1, g + 1):
                if not thresholds[s - 1].admits(base[s - 1] + gains[s]):
                    return False
        return True

    return accept


def _scan_smallest(
    accept: Callable[[int], bool],
    start: int,
    ceiling: int,
    members: set[int],
    workers: int = 1,
    chunk: int = 512,
) -> Optional[int]:
    """Smallest non-member m in [start, ceiling] with accept(m), or None.

    With workers > 1 the range is split into consecutive chunks evaluated
    concurrently against the frozen tables; chunks are reconciled in range
    order, so the winner is exactly the sequential scan's answer.
    """
    if workers <= 1:
        for m in range(start, ceiling + 1):
            if m not in members and accept(m):
                return m
        return None

    def best_in(lo: int, hi: int) -> Optional[int]:
        for m in range(lo, hi + 1):
            if m not in members and accept(m):
                return m
        return None

    with ThreadPoolExecutor(max_workers=workers) as pool:
        lo = start
        while lo <= ceiling:
            batch = []
            for _ in range(workers):
                if lo > ceiling:
                    break
                hi = min(lo + chunk - 1, ceiling)
                batch.append(pool.submit(best_in, lo, hi))
                lo = hi + 1
            for fut in batch:
                found = fut.result()
                if found is not None:
                    return found
    return None


def _sequential_scan_length(elements: list[int], start: int, found: int) -> int:
    """Candidates a sequential scan tests before accepting: the non-members
    in [start, found]."""
    skipped = bisect_right(elements, found) - bisect_left(elements, start)
    return found - start + 1 - skipped


def strong_greedy(
    params: Params,
    *,
    on_step: Optional[Callable[[StepMeta], None]] = None,
    workers: int = 1,
    chunk: int = 512,
    max_entries: int = DEFAULT_MAX_ENTRIES,
    literal_scan: bool = False,
) -> SequenceRecord:
    """Generate the strong greedy B_h[g] sequence.

    Each step scans candidates in increasing order, skipping members, and
    commits the smallest one that keeps the set strong.  The scan for the
    term of index n stops at floor(2g * n^(h+(h-1)/g)); finding no
    candidate there would contradict the proven ceiling, so it raises
    ScanExceededBound rather than scanning further.

    For g = 1 the level ceilings can never reject (see _accept_g1), so
    every rejection is a permanent B_h collision and the smallest
    admissible candidate always lies above the last term.  The scan
    therefore resumes there instead of restarting at m = 1, which provably
    yields the same sequence; pass literal_scan=True to force the
    restart-at-1 rule anyway.

    on_step, when given, is called with each StepMeta as it is committed.
    """
    h, g = params.h, params.g
    t = SumTableSet(h, max_entries=max_entries)
    rec = SequenceRecord(params, ALGORITHM_STRONG)
    _commit(rec, t, term=1, scan_length=0,
            bound_floor=theorem_bound(1, h, g).floor, elapsed=0.0, on_step=on_step)
    while len(rec.terms) < params.n_terms:
        t0 = time.perf_counter()
        n_next = len(t) + 1
        bound = theorem_bound(n_next, h, g)
        if g == 1:
            accept = _accept_g1(t)
            start = 1 if literal_scan else rec.terms[-1] + 1
        else:
            accept = _accept_general(t, g, n_next, check_levels=True)
            start = 1
        found = _scan_smallest(accept, start, bound.floor, t._members, workers, chunk)
        if found is None or not bound.admits(found):
            raise ScanExceededBound(
                f"no admissible candidate <= {bound.floor} for term {n_next} "
                f"(h={h}, g={g}); this contradicts the proven ceiling"
            )
        scan_length = _sequential_scan_length(t.elements, start, found)
        _commit(rec, t, term=found, scan_length=scan_length,
                bound_floor=bound.floor, elapsed=time.perf_counter() - t0,
                on_step=on_step)
    return rec


def default_classic_ceiling(n: int, h: int, g: int) -> int:
    """Default scan ceiling for the n-th classic-greedy term.

    For g = 1 the next term provably lies at or below 2n^(2h-1); the +1 is
    slack only.  For g > 1 no ceiling is proven and 2g * n^(2h-1) is merely
    a configurable guard.
    """
    if g == 1:
        return 2 * n ** (2 * h - 1) + 1
    return 2 * g * n ** (2 * h - 1)


def classic_greedy(
    params: Params,
    *,
    scan_cap: Optional[int] = None,
    on_step: Optional[Callable[[StepMeta], None]] = None,
    workers: int = 1,
    chunk: int = 512,
    max_entries: int = DEFAULT_MAX_ENTRIES,
) -> SequenceRecord:
    """Generate the classic greedy B_h[g] sequence (strictly increasing).

    scan_cap, when given, replaces the per-step default ceiling (see
    default_classic_ceiling).  A scan that exhausts its ceiling raises
    ScanExceededConfiguredLimit; generation never loops unbounded.
    """
    h, g = params.h, params.g
    t = SumTableSet(h, max_entries=max_entries)
    rec = SequenceRecord(params, ALGORITHM_CLASSIC)
    _commit(rec, t, term=1, scan_length=0,
            bound_floor=scan_cap if scan_cap is not None else default_classic_ceiling(1, h, g),
            elapsed=0.0, on_step=on_step)
    while len(rec.terms) < params.n_terms:
        t0 = time.perf_counter()
        n_next = len(t) + 1
        ceiling = scan_cap if scan_cap is not None else default_classic_ceiling(n_next, h, g)
        if g == 1:
            accept = _accept_g1(t)
        else:
            accept = _accept_general(t, g, n_next, check_levels=False)
        start = rec.terms[-1] + 1
        found = _scan_smallest(accept, start, ceiling, t._members, workers, chunk)
        if found is None:
            raise ScanExceededConfiguredLimit(
                f"no admissible candidate <= {ceiling} for term {n_next} "
                f"(h={h}, g={g}); raise the scan cap to continue"
            )
        _commit(rec, t, term=found, scan_length=found - start + 1,
                bound_floor=ceiling, elapsed=time.perf_counter() - t0,
                on_step=on_step)
    return rec


def _commit(rec, t, *, term, scan_length, bound_floor, elapsed, on_step):
    t.add_element(term)
    rec.terms.append(term)
    meta = StepMeta(len(rec.terms), term, scan_length, bound_floor, elapsed)
    rec.per_step.append(meta)
    if on_step is not None:
        on_step(meta)
