"""
Rational maps, resultants, and good reduction
=============================================

Parsing a map into a homogeneous pair, finding its bad primes, and
watching good reduction keep points from expanding p-adically.
"""

from p1dyn import (canonicalize, evaluate, good_reduction, log_distance,
                   parse_map, reduction_profile)

# A map can be given in affine form (in z) or as a homogeneous pair.
phi = parse_map("z^2 - 29/16")
print("input:", phi)
print("degree:", phi.degree)
print("numerator coefficients:", phi.a)
print("denominator coefficients:", phi.b)

# The resultant of the two forms detects primes of bad reduction:
# phi has good reduction at p exactly when p does not divide it.
profile = reduction_profile(phi)
print("\nresultant:", profile.resultant)
print("bad primes:", profile.bad_primes)
print("S =", profile.places, "so s =", profile.places.size)
print("good reduction at 3:", good_reduction(phi, 3))
print("good reduction at 2:", good_reduction(phi, 2))

# Non-expansion: at a prime of good reduction the map never increases
# delta_p.  Try it on a pair of 3-adically close points.
A = canonicalize(1, 1)
B = canonicalize(10, 1)  # 10 = 1 + 3^2
phiA, phiB = evaluate(phi, A), evaluate(phi, B)
print("\nphi(1) =", phiA, " phi(10) =", phiB)
before = log_distance(A, B, 3)
after = log_distance(phiA, phiB, 3)
print(f"delta_3 before = {before}, after = {after}, non-expanding: {after <= before}")

# At the bad prime 2 no such guarantee exists; distances can jump.
before2 = log_distance(canonicalize(1, 4), canonicalize(3, 4), 2)
after2 = log_distance(evaluate(phi, canonicalize(1, 4)),
                      evaluate(phi, canonicalize(3, 4)), 2)
print(f"at the bad prime: delta_2 before = {before2}, after = {after2}")
