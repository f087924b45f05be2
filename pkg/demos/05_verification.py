"""
Verifying the distance propositions and counting theorems
=========================================================

Every proved statement the library encodes can be checked against real
orbits: distance non-expansion, the tail-periodic zero-distance rule,
per-period tail caps, and the headline preperiodic count bounds.
"""

from p1dyn import (parse_map, parse_point, reduction_profile, run_suite,
                   check_chain_lemma, three_point_set, four_point_set,
                   PlaceSet, INFINITY)

# run_suite bundles all checks for one map.  Statuses are PASS, FAIL, or
# SKIPPED (when a hypothesis gate is unmet); FAIL never happens on a
# correct implementation because each statement is a theorem.
for text in ("z^2", "z^2-1", "z^2-29/16"):
    print(f"--- {text}")
    for r in run_suite(parse_map(text), "all"):
        extra = dict(r.parameters).get("checked")
        note = f" (checked {extra})" if extra else ""
        reason = f": {r.reason}" if r.reason and r.status == "SKIPPED" else ""
        print(f"  [{r.status}] {r.check_name}{note}{reason}")

# The chain rule for orbits falling into a fixed point: on z^2-2 the
# trajectory 0 -> -2 -> 2 has delta_2 pattern (1, 1, 2), equality first.
phi = parse_map("z^2-2")
chain = [parse_point("0"), parse_point("-2"), parse_point("2")]
r = check_chain_lemma(phi, reduction_profile(phi), parse_point("2"), chain)
print("\nchain check on z^2-2:", r.status)
for w in r.witnesses:
    print(" ", w)

# Distance-set enumerations behind the three- and four-point lemmas.
# With S = {inf, 2}: exactly the points whose coordinates and coordinate
# difference are all (up to sign) powers of two.
zero, one = parse_point("0"), parse_point("1")
members = three_point_set(zero, one, INFINITY, PlaceSet(frozenset({2})), height=50)
print("\nequal-distance set for {0, 1, inf}, S = {inf, 2}:",
      sorted(str(p) for p in members))
empty = four_point_set(zero, INFINITY, one, parse_point("-1"),
                       PlaceSet(frozenset()), height=100)
print("four-point set for {0, inf, 1, -1}, S = {inf}:", empty)
