#!/usr/bin/env python3
"""Walk through sequence generation and the exact term-size ceilings.

Generates the classic and strong greedy B_h[g] sequences for a few (h, g)
pairs, prints how close each run comes to its proven ceiling
a_n <= 2g * n^(h+(h-1)/g), and shows the g = 1 collapse (for g = 1 the
strong rule's level ceilings can never reject, so both algorithms emit the
same terms; for h = 2 that is the Mian-Chowla sequence).

Run:  python3 demos/generate_and_bound.py
"""

from bhgreedy import Params, classic_greedy, strong_bound_check, strong_greedy

N_TERMS = 25

print("=" * 72)
print("g = 1 collapse: strong and classic agree exactly")
print("=" * 72)
for h in (2, 3):
    strong = strong_greedy(Params(h, 1, N_TERMS))
    classic = classic_greedy(Params(h, 1, N_TERMS))
    assert strong.terms == classic.terms
    print(f"h={h}: {strong.terms[:12]} ... a_{N_TERMS} = {strong.terms[-1]}")
print()

print("=" * 72)
print("strong runs for g > 1 and their distance to the proven ceiling")
print("=" * 72)
for h, g in [(2, 2), (2, 3), (3, 2), (3, 3)]:
    rec = strong_greedy(Params(h, g, N_TERMS))
    report = strong_bound_check(rec)
    worst = report.worst
    print(f"h={h} g={g}: first terms {rec.terms[:10]}")
    print(f"  a_{N_TERMS} = {rec.terms[-1]}, sorted output: {rec.is_sorted}")
    print(f"  ceiling holds at every n: {report.ok}; tightest at n={worst.n} "
          f"where (a_n)^g / ((2g)^g n^(hg+h-1)) = {float(worst.ratio):.3e}")
print()

print("=" * 72)
print("where the strong rule first bites: (h, g) = (3, 3), step 20")
print("=" * 72)
strong = strong_greedy(Params(3, 3, 21))
classic = classic_greedy(Params(3, 3, 21))
div = next((i for i, (a, b) in enumerate(zip(strong.terms, classic.terms), 1)
            if a != b), None)
print(f"classic: {classic.terms}")
print(f"strong : {strong.terms}")
print(f"first divergence at n = {div}: the classic greedy takes "
      f"{classic.terms[div - 1]} (it keeps the set B_3[3]), but that choice "
      f"would push the count of triply-represented sums past the level-3 "
      f"ceiling, so the strong rule waits for {strong.terms[div - 1]}.")
