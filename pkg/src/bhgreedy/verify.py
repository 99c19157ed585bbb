"""From-scratch validation of B_h[g] sequences and of the forbidden-candidate
counting that underlies the strong greedy's ceiling.

Everything here recomputes what it checks from its own inputs.  Histograms
come from explicit multiset enumeration (``verify_bhg``,
``verify_strong_prefixes``, ``proof_diagnostics``), never from a generator's
cached state, and every fractional-exponent comparison is decided exactly in
integer arithmetic.

Window scans classify each candidate m in [1, floor(2g*(n+1)^(h+(h-1)/g))]
for a set A of size n:

  member          m is already in A
  bhg break       A + {m} is no longer a B_h[g] set
  level-s break   R_s(A + {m}) exceeds (n+1)^(h+(1-s)(h-1)/g)

The strong greedy picks the smallest candidate in none of these classes, so
the forbidden classes can never fill the window; ``forbidden_set_sizes``
reports the class sizes and checks exactly that.  ``proof_diagnostics``
additionally records, per step, the inequality instances that make the
counting argument checkable:

  window_union        union of forbidden classes  <=  window size - 1
  first_level_empty   no candidate can break level 1 (R_1 <= (n+1)^h always)
  bhg_break_bound     number of bhg breakers      <=  2n^(h+(h-1)/g)
  level_break_bound   number of level-s breakers  <=  2n^(h+(h-1)/g)
  promotion_total     sum over the window of t_count(m)
                                                  <=  (1+n+..+n^(h-1)) R_{s-1}
  promotion_witness   each level-s breaker m has t_count(m) > n^(h-1+(1-s)(h-1)/g)
  profile_growth      R_s(A + {m})  <=  R_s(A) + t_count(m)   [see below]

Here t_count(m) counts the distinct sums x that already have multiplicity
at least s-1 in A and that m can reach, i.e. x = k*m + (a (h-k)-fold sum of
A) for some k in 1..h (k = h reaches only h*m).

profile_growth is recorded in this literal form deliberately, although it is
not a theorem: one candidate can add two or more new representations to the
same x (for example A = {1, 2}, h = 3, m = 3 gives x = 7 both 1+3+3 and
2+2+3), lifting a sum from multiplicity s-2 or lower straight past s while
t_count, which only sees sums already at s-1, counts nothing.  For h = 2
one candidate adds at most one representation per sum, so there the
inequality is rigorous and every recorded instance holds.  Violations are
reported faithfully, never filtered.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Optional

from .errors import GuardExceeded
from .greedy import (
    SequenceRecord,
    Threshold,
    int_nth_root,
    theorem_bound,
    threshold_leq,
)
from .sumrep import DEFAULT_MAX_ENUMERATION, SumTableSet

#: Cap on the size of a candidate window a single scan may classify.
DEFAULT_MAX_WINDOW = 2_000_000

#: Default number of profile_growth samples recorded per step and level.
DEFAULT_SAMPLE_BUDGET = 32


# ---------------------------------------------------------------------------
# Results


@dataclass(frozen=True)
class BhgCheck:
    """Outcome of a B_h[g] test: ok, or the smallest offending sum."""

    ok: bool
    x: Optional[int] = None
    count: Optional[int] = None


@dataclass(frozen=True)
class PrefixCheck:
    """Strong-set verdict for one prefix: the B_h[g] condition plus the
    level ceilings, both recomputed by enumeration."""

    n: int
    bhg: BhgCheck
    level_ok: bool
    failed_s: Optional[int] = None
    level_count: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.bhg.ok and self.level_ok


@dataclass(frozen=True)
class BoundEntry:
    n: int
    term: int
    ok: bool
    #: lhs/rhs of the exact comparison, as a fraction of the ceiling's power.
    ratio: Fraction


@dataclass
class BoundReport:
    """Per-index verdicts of a term-size ceiling, with the exact ratio of
    each term (raised to the comparison power) to the ceiling."""

    kind: str
    h: int
    g: int
    entries: list[BoundEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def worst(self) -> BoundEntry:
        return max(self.entries, key=lambda e: e.ratio)

    def failures(self) -> list[BoundEntry]:
        return [e for e in self.entries if not e.ok]


@dataclass
class ForbiddenSetReport:
    """Window-scan classification of every candidate for one step.

    Counts are restricted to the scan window [1, window_hi]; window_hi is
    floor(2g*(n+1)^(h+(h-1)/g)), the ceiling the next term provably
    respects.  union_cap is window_hi - 1: when the union check holds, at
    least one admissible candidate exists in the window.
    """

    h: int
    g: int
    n: int
    window_hi: int
    members: int
    bhg_breaks: int
    level_breaks: tuple[int, ...]
    union_size: int
    union_cap: int
    first_admissible: Optional[int]

    @property
    def union_ok(self) -> bool:
        return self.union_size <= self.union_cap

    @property
    def first_level_empty(self) -> bool:
        return self.level_breaks[0] == 0


@dataclass(frozen=True)
class InequalityInstance:
    """One recorded inequality check: lhs <relation> rhs.

    rhs is exact for the comparison: ceilings with fractional exponents are
    compared via integer powers, and rhs stores the integer floor of the
    ceiling, which preserves the verdict for integer lhs.
    """

    name: str
    step: int
    lhs: int
    rhs: int
    relation: str = "<="
    s: Optional[int] = None
    m: Optional[int] = None

    @property
    def holds(self) -> bool:
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">":
            return self.lhs > self.rhs
        raise ValueError(f"unknown relation {self.relation!r}")

    def describe(self) -> str:
        tag = f" s={self.s}" if self.s is not None else ""
        tag += f" m={self.m}" if self.m is not None else ""
        verdict = "ok" if self.holds else "FAIL"
        return (f"step={self.step}{tag} {self.name}: "
                f"{self.lhs} {self.relation} {self.rhs} {verdict}")


@dataclass
class ProofDiagnostics:
    """Per-step inequality ledger for a generated (or supplied) sequence."""

    h: int
    g: int
    terms: list[int]
    prefix_checks: list[PrefixCheck] = field(default_factory=list)
    reports: list[ForbiddenSetReport] = field(default_factory=list)
    instances: list[InequalityInstance] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(c.ok for c in self.prefix_checks)
                and all(i.holds for i in self.instances))

    def failures(self) -> list[InequalityInstance]:
        return [i for i in self.instances if not i.holds]

    def failed_prefixes(self) -> list[PrefixCheck]:
        return [c for c in self.prefix_checks if not c.ok]


# ---------------------------------------------------------------------------
# Enumeration primitives (the from-scratch route)


def _check_distinct_positive(A) -> list[int]:
    elems = sorted(A)
    if any(a < 1 for a in elems):
        raise ValueError("elements must be positive integers")
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    return elems


def _guard_enumeration(n: int, h: int, cap: int) -> None:
    total = comb(n + h - 1, h) if n + h > 0 else 1
    if total > cap:
        raise GuardExceeded(
            f"enumeration of {total} multisets exceeds cap {cap}"
        )


def _histogram(elems: list[int], h: int, cap: int) -> Counter:
    _guard_enumeration(len(elems), h, cap)
    return Counter(sum(c) for c in combinations_with_replacement(elems, h))


def _fold_histograms(elems: list[int], h: int, cap: int) -> list[Counter]:
    """Multiset-sum histograms for every fold 0..h, by enumeration."""
    out = []
    for j in range(h + 1):
        _guard_enumeration(len(elems), j, cap)
        out.append(Counter(sum(c) for c in combinations_with_replacement(elems, j)))
    return out


def _level_count(hist: Counter, s: int) -> int:
    return sum(1 for c in hist.values() if c >= s)


# ---------------------------------------------------------------------------
# Membership and prefix checks


def verify_bhg(A, h: int, g: int, *,
               max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> BhgCheck:
    """Enumerate every size-h multiset of A and report the smallest sum
    whose multiplicity exceeds g, if any.  Never touches SumTableSet."""
    elems = _check_distinct_positive(A)
    hist = _histogram(elems, h, max_enumeration)
    bad = [x for x, c in hist.items() if c > g]
    if not bad:
        return BhgCheck(True)
    x = min(bad)
    return BhgCheck(False, x=x, count=hist[x])


def verify_strong_prefixes(terms, h: int, g: int, *,
                           max_enumeration: int = DEFAULT_MAX_ENUMERATION,
                           ) -> list[PrefixCheck]:
    """Check both strong-set conditions on every prefix of terms.

    Condition (i), the B_h[g] property, is checked by full enumeration;
    condition (ii) compares every level count of the prefix against
    n^(h+(1-s)(h-1)/g) exactly.  Entirely independent of any generator
    state: each prefix is re-enumerated from the bare term list.
    """
    terms = list(terms)
    _check_distinct_positive(terms)
    out = []
    for n in range(1, len(terms) + 1):
        prefix = sorted(terms[:n])
        hist = _histogram(prefix, h, max_enumeration)
        bad = [x for x, c in hist.items() if c > g]
        if bad:
            x = min(bad)
            bhg = BhgCheck(False, x=x, count=hist[x])
        else:
            bhg = BhgCheck(True)
        level_ok, failed_s, level_count = True, None, None
        for s in range(1, g + 1):
            r_s = _level_count(hist, s)
            if not threshold_leq(r_s, n, h, g, s):
                level_ok, failed_s, level_count = False, s, r_s
                break
        out.append(PrefixCheck(n, bhg, level_ok, failed_s, level_count))
    return out


# ---------------------------------------------------------------------------
# Term-size ceilings


def strong_bound_check(rec: SequenceRecord) -> BoundReport:
    """Exact per-index verdict of a_n <= 2g * n^(h+(h-1)/g).

    The comparison is a_n^g <= (2g)^g * n^(hg+h-1); each entry's ratio is
    the exact fraction lhs/rhs of that integer comparison.
    """
    h, g = rec.params.h, rec.params.g
    entries = []
    for n, term in enumerate(rec.terms, 1):
        rhs = theorem_bound(n, h, g).rhs_pow
        lhs = term ** g
        entries.append(BoundEntry(n, term, lhs <= rhs, Fraction(lhs, rhs)))
    return BoundReport("strong-ceiling", h, g, entries)


def classic_bound_check(rec: SequenceRecord) -> BoundReport:
    """Per-index verdict of a_n <= 2n^(2h-1) for classic g = 1 runs.

    Only g = 1 has a proven ceiling, so other records are rejected.
    """
    h, g = rec.params.h, rec.params.g
    if g != 1:
        raise ValueError("classic ceiling is only proven for g = 1")
    entries = []
    for n, term in enumerate(rec.terms, 1):
        rhs = 2 * n ** (2 * h - 1)
        entries.append(BoundEntry(n, term, term <= rhs, Fraction(term, rhs)))
    return BoundReport("classic-ceiling", h, g, entries)


# ---------------------------------------------------------------------------
# Window scans


def forbidden_set_sizes(A, h: int, g: int, *,
                        max_window: int = DEFAULT_MAX_WINDOW,
                        ) -> ForbiddenSetReport:
    """Classify every candidate in the next step's scan window.

    Classification is by direct evaluation of the definitions: membership,
    whether A + {m} stays B_h[g], and whether any level count of A + {m}
    exceeds its ceiling at size n+1.  A candidate can fall into several
    classes; union_size counts candidates in at least one.

    The per-candidate arithmetic runs on a table set built freshly from A
    here; the brute-force route lives in proof_diagnostics, and the test
    suite cross-checks the two on shared windows.
    """
    elems = _check_distinct_positive(A)
    n = len(elems)
    bound = theorem_bound(n + 1, h, g)
    if bound.floor > max_window:
        raise GuardExceeded(
            f"scan window 1..{bound.floor} exceeds cap {max_window}"
        )
    t = SumTableSet(h)
    for a in elems:
        t.add_element(a)
    th = t.tables[h]
    lowers = [(k, t.tables[h - k]) for k in range(1, h + 1)]
    base = t.rep_histogram(g).counts
    thresholds = [Threshold.for_level(n + 1, h, g, s) for s in range(1, g + 1)]

    members = 0
    bhg_breaks = 0
    level_breaks = [0] * g
    union = 0
    first_admissible = None
    for m in range(1, bound.floor + 1):
        if m in t:
            members += 1
            union += 1
            continue
        added: dict[int, int] = {}
        for k, tab in lowers:
            km = k * m
            for y, c in tab.items():
                x = km + y
                added[x] = added.get(x, 0) + c
        breaks_bhg = False
        gains = [0] * (g + 2)
        for x, add in added.items():
            lo = th.get(x, 0)
            if lo + add > g:
                breaks_bhg = True
            for s in range(lo + 1, min(lo + add, g) + 1):
                gains[s] += 1
        forbidden = breaks_bhg
        if breaks_bhg:
            bhg_breaks += 1
        for s in range(1, g + 1):
            if not thresholds[s - 1].admits(base[s - 1] + gains[s]):
                level_breaks[s - 1] += 1
                forbidden = True
        if forbidden:
            union += 1
        elif first_admissible is None:
            first_admissible = m
    return ForbiddenSetReport(
        h=h, g=g, n=n, window_hi=bound.floor,
        members=members, bhg_breaks=bhg_breaks,
        level_breaks=tuple(level_breaks),
        union_size=union, union_cap=bound.floor - 1,
        first_admissible=first_admissible,
    )


def t_count(A, m: int, s: int, h: int, *,
            max_enumeration: int = DEFAULT_MAX_ENUMERATION) -> int:
    """Distinct sums x with multiplicity >= s-1 in A that candidate m
    reaches as x = k*m + (a (h-k)-fold sum of A), k = 1..h.

    The k = h class reaches only x = h*m.  Counts distinct x, not
    (k, sum) witnesses.  Computed entirely by enumeration.
    """
    if s < 2:
        raise ValueError(f"defined for levels s >= 2, got {s}")
    elems = _check_distinct_positive(A)
    hist = _histogram(elems, h, max_enumeration)
    folds = _fold_histograms(elems, h - 1, max_enumeration)
    xs = set()
    for k in range(1, h + 1):
        km = k * m
        for y in folds[h - k]:
            x = km + y
            if hist.get(x, 0) >= s - 1:
                xs.add(x)
    return len(xs)


def proof_diagnostics(rec: SequenceRecord, *,
                      sample_budget: int = DEFAULT_SAMPLE_BUDGET,
                      max_window: int = DEFAULT_MAX_WINDOW,
                      max_enumeration: int = DEFAULT_MAX_ENUMERATION,
                      ) -> ProofDiagnostics:
    """Recompute, entirely by enumeration, the per-step forbidden-candidate
    counts of a run and record every checkable inequality instance.

    For each prefix A_n (n = 2 .. len(terms)) the full window
    [1, floor(2g*(n+1)^(h+(h-1)/g))] is scanned: every candidate is
    classified from brute-force fold histograms of A_n, level-s breakers
    collect their promotion_witness instances, the windowed sum of
    t_count feeds promotion_total, and profile_growth instances are
    recorded for a deterministic sample of candidates (every next accepted
    term plus an even stride across the window, at most sample_budget per
    step and level).

    Prefix validity (both strong-set conditions) is checked for every
    prefix as well, so a corrupted record names its failure here.
    """
    h, g = rec.params.h, rec.params.g
    terms = list(rec.terms)
    diag = ProofDiagnostics(h, g, terms)
    diag.prefix_checks = verify_strong_prefixes(
        terms, h, g, max_enumeration=max_enumeration)

    for n in range(2, len(terms) + 1):
        prefix = sorted(terms[:n])
        members = set(prefix)
        bound = theorem_bound(n + 1, h, g)
        win = bound.floor
        if win > max_window:
            raise GuardExceeded(f"scan window 1..{win} exceeds cap {max_window}")
        folds = _fold_histograms(prefix, h, max_enumeration)
        hist = folds[h]
        base = [_level_count(hist, s) for s in range(g + 1)]  # base[s], base[0] unused
        thresholds = [Threshold.for_level(n + 1, h, g, s) for s in range(1, g + 1)]
        # Ceiling 2n^(h+(h-1)/g) shared by the break-count bounds.
        break_cap = int_nth_root(2 ** g * n ** (h * g + h - 1), g)

        next_term = terms[n] if n < len(terms) else None
        stride = max(1, win // max(1, sample_budget))
        sample = set(range(1, win + 1, stride))
        if next_term is not None and next_term <= win:
            sample.add(next_term)

        bhg_breaks = 0
        level_breaks = [0] * (g + 1)
        union = 0
        member_count = 0
        first_admissible = None
        t_sums = [0] * (g + 1)
        for m in range(1, win + 1):
            if m in members:
                member_count += 1
                union += 1
                continue
            added: dict[int, int] = {}
            for k in range(1, h + 1):
                km = k * m
                for y, c in folds[h - k].items():
                    x = km + y
                    added[x] = added.get(x, 0) + c
            breaks_bhg = False
            gains = [0] * (g + 2)
            for x, add in added.items():
                lo = hist.get(x, 0)
                if lo + add > g:
                    breaks_bhg = True
                for s in range(lo + 1, min(lo + add, g) + 1):
                    gains[s] += 1
            t_vals = [0] * (g + 1)
            for s in range(2, g + 1):
                t_vals[s] = sum(
                    1 for x in added if hist.get(x, 0) >= s - 1
                )
                t_sums[s] += t_vals[s]
            forbidden = breaks_bhg
            if breaks_bhg:
                bhg_breaks += 1
            for s in range(1, g + 1):
                if not thresholds[s - 1].admits(base[s] + gains[s]):
                    level_breaks[s] += 1
                    forbidden = True
                    if s >= 2:
                        # Strict witness bound behind the break-count cap.
                        diag.instances.append(InequalityInstance(
                            "promotion_witness", n,
                            lhs=t_vals[s],
                            rhs=int_nth_root(
                                n ** ((h - 1) * g + (1 - s) * (h - 1)), g),
                            relation=">", s=s, m=m))
            if forbidden:
                union += 1
            elif first_admissible is None:
                first_admissible = m
            if m in sample:
                for s in range(2, g + 1):
                    diag.instances.append(InequalityInstance(
                        "profile_growth", n,
                        lhs=base[s] + gains[s],
                        rhs=base[s] + t_vals[s],
                        s=s, m=m))

        diag.reports.append(ForbiddenSetReport(
            h=h, g=g, n=n, window_hi=win,
            members=member_count, bhg_breaks=bhg_breaks,
            level_breaks=tuple(level_breaks[1:]),
            union_size=union, union_cap=win - 1,
            first_admissible=first_admissible,
        ))
        diag.instances.append(InequalityInstance(
            "window_union", n, lhs=union, rhs=win - 1))
        diag.instances.append(InequalityInstance(
            "first_level_empty", n, lhs=level_breaks[1], rhs=0))
        diag.instances.append(InequalityInstance(
            "bhg_break_bound", n, lhs=bhg_breaks, rhs=break_cap))
        for s in range(2, g + 1):
            diag.instances.append(InequalityInstance(
                "level_break_bound", n, lhs=level_breaks[s], rhs=break_cap,
                s=s))
            geometric = sum(n ** i for i in range(h))
            diag.instances.append(InequalityInstance(
                "promotion_total", n, lhs=t_sums[s],
                rhs=geometric * base[s - 1], s=s))
    return diag
