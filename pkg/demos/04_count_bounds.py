"""
Uniform preperiodic count bounds, kept exact
============================================

The bound table depends only on the degree d and the number of places s.
Some entries are small integers; others are numbers like e^(30^15) whose
decimal expansion could never be written down.  The magnitude type keeps
both kinds comparable without ever rounding through floats.
"""

from p1dyn import (bound_table, compare, digit_count, exact, exp_of,
                   force_exact, power, Comparison)
from fractions import Fraction

# Good reduction everywhere (s = 1) for a quadratic map:
table = bound_table(2, 1)
print("B    =", force_exact(table["B"]))
print("L1   =", force_exact(table["L1"]))
print("L3   =", force_exact(table["L3"]))
print("T    =", force_exact(table["T"]))
print("TPLA =", force_exact(table["TPLA"]))

# C(3,1) = e^(18^9) and C(5,1) = e^(30^15) are too large to materialize,
# but their digit counts are still computable exactly (up to the +-1
# inherent in bracketing an irrational logarithm).
c3, c5 = table["C3"], table["C5"]
print("\nln C3 =", c3.ln, " digits:", digit_count(c3))
print("ln C5 =", c5.ln, " digits:", digit_count(c5))
print("Q digits:", digit_count(table["Q"]))

# Comparisons run in log space with directed rounding, so they are
# decisions, not estimates.
print("\nC5 > C3:", compare(c5, c3) is Comparison.GREATER)
print("Q > 9 preperiodic points:", compare(table["Q"], exact(9)) is Comparison.GREATER)

# Mixed scales work too: 3^(2^24) versus 2^(2^24) versus a googol-ish int.
a = power(exact(3), 2**24)
b = power(exact(2), 2**24)
g = power(exact(10), 300)
print("3^(2^24) > 2^(2^24):", compare(a, b) is Comparison.GREATER)
print("2^(2^24) > 10^300:", compare(b, g) is Comparison.GREATER)
print("digits of 2^(2^24):", digit_count(b))

# Growing s loosens every bound; the engine sees the gap immediately.
print("\nT(s=1) vs T(s=2):", compare(table["T"], bound_table(2, 2)["T"]).name)
print("e^x at rational x also works:", compare(exp_of(Fraction(7, 2)), exact(33)).name)
