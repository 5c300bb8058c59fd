"""From prospective pairs to actual prime pairs.

A prospective prime of level k below P_{k+1}^2 has no room for a factor,
so it is prime.  Combining that with the lineage counting formula gives
a guaranteed number of gap-g prime pairs inside (P_k, P_{k+1}^2) with
k = pi(sqrt(P_l#)) — a lower bound this script compares with what the
sieve actually finds, then tracks how fast the bound grows per level.

Run:  python3 demos/03_pair_bounds.py
"""

from polignac.primepairs import (
    bound_report,
    growth_ratio,
    verify_prospective_below_square,
)

print("least composite prospective prime at level k (always P_{k+1}^2):")
for k in (3, 4, 5, 6):
    r = verify_prospective_below_square(k)
    print(f"  k={k}: {r.least_composite}  holds={r.holds}")

print("\nlower bound vs sieve count, gap-g pairs in (P_k, P_{k+1}^2):")
for r_level, l, g in ((2, 4, 2), (2, 5, 2), (3, 5, 4), (3, 5, 6)):
    rep = bound_report(r_level, l, g)
    print(
        f"  l={l} g={g}: window {rep.window}, bound {float(rep.bound):6.1f}, "
        f"observed {rep.observed}, holds={rep.holds}"
    )

print("\nper-level growth factor of the bound (exceeds 1 from l=9 on,")
print("so the guaranteed pair count diverges):")
for l in (8, 9, 10, 12, 15, 20):
    print(f"  l={l}: x{growth_ratio(l):.1f}")
