"""
Sweeping the quadratic family z^2 + c
=====================================

How large can a rational preperiodic set get?  Sweep c = n/m over a box,
count preperiodic points for each map, and watch 9 stand out.  The same
sweep is available from the command line:

    p1dyn batch --family "z^2+c" --c-num-max 32 --c-den-max 32 --csv out.csv
"""

from fractions import Fraction
from math import gcd

from p1dyn import enumerate_preperiodic, parse_map, reduction_profile

NUM_MAX, DEN_MAX, HEIGHT = 32, 16, 64

records = []
for den in range(1, DEN_MAX + 1):
    for num in range(-NUM_MAX, NUM_MAX + 1):
        if gcd(num, den) != 1:
            continue
        c = Fraction(num, den)
        text = f"z^2+{c}" if num >= 0 else f"z^2-{-c}"
        inv = enumerate_preperiodic(parse_map(text), HEIGHT)
        records.append((c, inv))

best = max(len(inv.preper) for _, inv in records)
print(f"swept {len(records)} values of c at height {HEIGHT}")
print(f"largest preperiodic count: {best}")

# Show every record-holder with its orbit structure.
for c, inv in records:
    if len(inv.preper) != best:
        continue
    profile = reduction_profile(inv.pair)
    cycles = ", ".join(f"period {len(cy)}" for cy in inv.cycles)
    print(f"\nc = {c}  (bad primes {list(profile.bad_primes)})")
    print(f"  {len(inv.per)} periodic ({cycles}), {len(inv.tail)} tail points")

# The distribution: how many maps attain each count.
histogram = {}
for _, inv in records:
    histogram[len(inv.preper)] = histogram.get(len(inv.preper), 0) + 1
print("\ncount -> number of maps")
for n in sorted(histogram):
    print(f"  {n:2d} -> {histogram[n]}")
