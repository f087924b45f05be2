"""
p-adic log-distances on the projective line
===========================================

Points of P^1(Q) in canonical coprime coordinates, the cross-product
distance delta_p, and the ultrametric inequality seen on actual numbers.
"""

from p1dyn import (INFINITY, canonicalize, cross_product, distance_support,
                   from_rational, log_distance, parse_point)
from fractions import Fraction

# Every rational point has one canonical representative [x : y] with
# gcd(x, y) = 1 and y > 0 (or [1 : 0] for the point at infinity).
P = canonicalize(6, 4)
print("canonical form of [6 : 4]:", P)
print("the same point from a fraction:", from_rational(Fraction(3, 2)))
print("parsed from text:", parse_point("3/2"), parse_point("inf"))

# delta_p(P1, P2) is the p-adic valuation of the cross product
# x1*y2 - x2*y1.  It is 0 when the points stay distinct mod p and grows
# as they collide to higher and higher precision.
A = canonicalize(1, 4)   # 1/4
B = canonicalize(-7, 4)  # -7/4
print("\ncross product of 1/4 and -7/4:", cross_product(A, B))
for p in (2, 3, 5):
    print(f"delta_{p}(1/4, -7/4) =", log_distance(A, B, p))

# distance_support factors the cross product once and reports every prime
# with a positive distance; outside this finite set delta_p is zero.
print("support of (1/4, -7/4):", distance_support(A, B))
print("support of (1/4, inf):", distance_support(A, INFINITY))

# The ultrametric inequality: delta_p(P1,P3) >= min of the other two.
# Squeeze three points 2-adically close together and watch it hold.
C = canonicalize(9, 4)
d_ab = log_distance(A, B, 2)
d_bc = log_distance(B, C, 2)
d_ac = log_distance(A, C, 2)
print(f"\ndelta_2(A,B) = {d_ab}, delta_2(B,C) = {d_bc}, delta_2(A,C) = {d_ac}")
print("ultrametric check:", d_ac >= min(d_ab, d_bc))
