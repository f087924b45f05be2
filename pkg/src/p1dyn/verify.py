"""Exact verification of the distance propositions and counting bounds.

Every check here encodes a proved statement, so on valid input the expected
status is PASS (or SKIPPED when a hypothesis is not met); a FAIL means the
implementation, not the mathematics, is broken.  All distance conditions of
the shape "for every prime outside S" are decided exhaustively by factoring
cross products: a prime outside every support contributes distance zero to
both sides, so finitely many primes settle the universal claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import aggregate_bounds, tail_bounds, unit_equation_bounds
from .intarith import is_prime
from .magnitude import Comparison, compare, exact, force_exact, sum_of
from .orbits import DynamicalInventory, enumerate_preperiodic
from .projline import (
    INFINITE_DISTANCE,
    ProjPoint,
    distance_support,
    format_point,
    log_distance,
    point_sort_key,
    points_up_to_height,
)
from .ratmap import HomogPair, PlaceSet, ReductionProfile, evaluate, reduction_profile

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"

#: Cap on stored confirmation witnesses so large suites stay readable.
_WITNESS_CAP = 24


class VerificationInputError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    status: str
    reason: str = ""
    witnesses: tuple = ()
    parameters: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def _finish(name, failures, confirmations, checked, params, reason=""):
    if failures:
        return VerificationReport(name, FAIL, reason="inequality violated",
                                  witnesses=tuple(failures), parameters=tuple(params))
    witnesses = tuple(confirmations[:_WITNESS_CAP])
    if len(confirmations) > _WITNESS_CAP:
        witnesses += (f"... {len(confirmations) - _WITNESS_CAP} more",)
    params = tuple(params) + (("checked", str(checked)),)
    return VerificationReport(name, PASS, reason=reason, witnesses=witnesses,
                              parameters=params)


def _fmt(p: ProjPoint) -> str:
    return format_point(p)


def _good_support(profile: ReductionProfile, p1: ProjPoint, p2: ProjPoint):
    """Distance support restricted to good-reduction primes; None if p1 = p2."""
    if p1 == p2:
        return None
    bad = set(profile.bad_primes)
    return {p: v for p, v in distance_support(p1, p2).items() if p not in bad}


def check_ultrametric(points) -> VerificationReport:
    """Triangle inequality δ_p(P1,P3) >= min(δ_p(P1,P2), δ_p(P2,P3))."""
    pts = sorted(set(points), key=point_sort_key)
    if len(pts) < 3:
        raise VerificationInputError("ultrametric check needs at least three points")
    failures, confirmations = [], []
    checked = 0
    for trio in itertools.combinations(pts, 3):
        for mid_idx in range(3):
            p2 = trio[mid_idx]
            p1, p3 = (trio[i] for i in range(3) if i != mid_idx)
            primes = set()
            for a, b in ((p1, p3), (p1, p2), (p2, p3)):
                primes.update(distance_support(a, b))
            for p in sorted(primes):
                lhs = log_distance(p1, p3, p)
                rhs = min(log_distance(p1, p2, p), log_distance(p2, p3, p))
                checked += 1
                if lhs < rhs:
                    failures.append(
                        f"d_{p}({_fmt(p1)},{_fmt(p3)})={lhs} < "
                        f"min over {_fmt(p2)} = {rhs}"
                    )
    confirmations.append(f"{len(pts)} points, all ordered triples")
    return _finish("ultrametric", failures, confirmations, checked,
                   [("points", str(len(pts)))])


def check_non_expansion(pair: HomogPair, profile: ReductionProfile,
                        points) -> VerificationReport:
    """Good reduction never shrinks distances: δ_p(φP, φQ) >= δ_p(P, Q)."""
    pts = sorted(set(points), key=point_sort_key)
    bad = set(profile.bad_primes)
    failures, confirmations = [], []
    checked = 0
    for p1, p2 in itertools.combinations(pts, 2):
        i1, i2 = evaluate(pair, p1), evaluate(pair, p2)
        primes = set(distance_support(p1, p2))
        if i1 != i2:
            primes.update(distance_support(i1, i2))
        for p in sorted(primes - bad):
            before = log_distance(p1, p2, p)
            after = INFINITE_DISTANCE if i1 == i2 else log_distance(i1, i2, p)
            checked += 1
            if after < before:
                failures.append(
                    f"d_{p}({_fmt(i1)},{_fmt(i2)})={after} < "
                    f"d_{p}({_fmt(p1)},{_fmt(p2)})={before}"
                )
    confirmations.append(f"{len(pts)} points, all pairs, good primes only")
    return _finish("non_expansion", failures, confirmations, checked,
                   [("map", pair.source or "pair"), ("points", str(len(pts)))])


def check_chain_lemma(pair: HomogPair, profile: ReductionProfile,
                      p0: ProjPoint, chain) -> VerificationReport:
    """Distances along a chain into a fixed point.

    chain lists consecutive iterates ending at the fixed point p0; for
    positions i < j before p0 (so chain[i] is farther from p0) the claim is
    d_p(chain[i], chain[j]) = d_p(chain[i], p0) <= d_p(chain[j], p0) at
    every good prime p.
    """
    chain = list(chain)
    if evaluate(pair, p0) != p0:
        raise VerificationInputError(f"{_fmt(p0)} is not a fixed point")
    if not chain or chain[-1] != p0:
        raise VerificationInputError("chain must end at the fixed point")
    if len(chain) < 3:
        raise VerificationInputError("chain needs two points before the fixed point")
    for i in range(len(chain) - 1):
        image = evaluate(pair, chain[i])
        if image != chain[i + 1]:
            raise VerificationInputError(
                f"chain breaks at position {i}: "
                f"image of {_fmt(chain[i])} is {_fmt(image)}, not {_fmt(chain[i + 1])}"
            )
    bad = set(profile.bad_primes)
    failures, confirmations = [], []
    checked = 0
    for i, j in itertools.combinations(range(len(chain) - 1), 2):
        far, near = chain[i], chain[j]
        primes = set()
        for a, b in ((far, near), (far, p0), (near, p0)):
            if a != b:
                primes.update(distance_support(a, b))
        for p in sorted(primes - bad):
            d_fn = log_distance(far, near, p)
            d_f0 = log_distance(far, p0, p)
            d_n0 = log_distance(near, p0, p)
            checked += 1
            if d_fn != d_f0 or not d_f0 <= d_n0:
                failures.append(
                    f"p={p}: d({_fmt(far)},{_fmt(near)})={d_fn}, "
                    f"d({_fmt(far)},{_fmt(p0)})={d_f0}, "
                    f"d({_fmt(near)},{_fmt(p0)})={d_n0}"
                )
            else:
                confirmations.append(
                    f"p={p}: {d_fn} = {d_f0} <= {d_n0} "
                    f"for ({_fmt(far)}, {_fmt(near)})"
                )
    return _finish("chain_equality", failures, confirmations, checked,
                   [("fixed_point", _fmt(p0)), ("chain_length", str(len(chain) - 1))])


def _cycle_of(inv: DynamicalInventory, point: ProjPoint):
    for cycle in inv.cycles:
        if point in cycle:
            return cycle
    return None


def _excluded_periodic(inv: DynamicalInventory, tail_point: ProjPoint) -> ProjPoint:
    """The unique periodic point reachable from a tail point in a multiple
    of its cycle length: entry shifted back by the tail length."""
    t = inv.tail_lengths[tail_point]
    cur = tail_point
    for _ in range(t):
        cur = inv.image[cur]
    cycle = _cycle_of(inv, cur)
    return cycle[(cycle.index(cur) - t) % len(cycle)]


def check_tail_periodic_distance(inv: DynamicalInventory,
                                 profile: ReductionProfile) -> VerificationReport:
    """Tail points sit at distance zero from almost every periodic point.

    The only periodic point allowed nonzero distance from a tail point R is
    the one R reaches after a multiple of the cycle length.
    """
    name = "tail_periodic_distance"
    if inv.incomplete:
        return VerificationReport(name, SKIPPED, reason="inventory incomplete")
    bad = set(profile.bad_primes)
    failures, confirmations = [], []
    checked = 0
    for r in sorted(inv.tail, key=point_sort_key):
        excluded = _excluded_periodic(inv, r)
        for p_per in sorted(inv.per, key=point_sort_key):
            if p_per == excluded:
                continue
            support = set(distance_support(p_per, r)) - bad
            checked += 1
            if support:
                failures.append(
                    f"d_p({_fmt(p_per)},{_fmt(r)}) nonzero at good primes {sorted(support)}"
                )
            else:
                confirmations.append(f"({_fmt(p_per)}, {_fmt(r)}) zero outside S")
    return _finish(name, failures, confirmations, checked,
                   [("tails", str(len(inv.tail))), ("periodic", str(len(inv.per)))])


def check_critical_distance(inv: DynamicalInventory,
                            profile: ReductionProfile) -> VerificationReport:
    """Periodic points are at distance zero from every critical-cycle point."""
    name = "critical_distance"
    if inv.incomplete:
        return VerificationReport(name, SKIPPED, reason="inventory incomplete")
    bad = set(profile.bad_primes)
    failures, confirmations = [], []
    checked = 0
    for p_per in sorted(inv.per, key=point_sort_key):
        for q in sorted(inv.per0, key=point_sort_key):
            if p_per == q:
                continue
            support = set(distance_support(p_per, q)) - bad
            checked += 1
            if support:
                failures.append(
                    f"d_p({_fmt(p_per)},{_fmt(q)}) nonzero at good primes {sorted(support)}"
                )
            else:
                confirmations.append(f"({_fmt(p_per)}, {_fmt(q)}) zero outside S")
    return _finish(name, failures, confirmations, checked,
                   [("periodic", str(len(inv.per))), ("critical_cycle", str(len(inv.per0)))])


def _restricted_support(point: ProjPoint, q: ProjPoint, excluded_primes):
    if point == q:
        return None  # infinite distance everywhere
    return {p: v for p, v in distance_support(point, q).items()
            if p not in excluded_primes}


def three_point_set(q1: ProjPoint, q2: ProjPoint, q3: ProjPoint,
                    places: PlaceSet, targets=None, height: int = 50):
    """Points whose distances to three fixed points obey a rigid pattern.

    Without targets: all P of height <= height with
    d_p(P,q1) = d_p(P,q2) = d_p(P,q3) at every prime p outside places.
    With targets, a map (i, p) -> n with i in {0,1,2}: demands
    d_p(P, q_i) = n at the given primes and 0 at every other good prime.
    Membership is decided exactly by factoring the three cross products.
    """
    qs = (q1, q2, q3)
    if len(set(qs)) != 3:
        raise VerificationInputError("the three reference points must be distinct")
    excluded = set(places.finite)
    wanted = None
    if targets is not None:
        wanted = [{}, {}, {}]
        for (i, p), n in targets.items():
            if i not in (0, 1, 2):
                raise VerificationInputError(f"target index {i} out of range")
            if not is_prime(p):
                raise VerificationInputError(f"target prime {p} is not prime")
            if p in excluded:
                raise VerificationInputError(f"target prime {p} lies in the place set")
            if not isinstance(n, int) or n < 0:
                raise VerificationInputError("target distances are nonnegative integers")
            if n > 0:
                wanted[i][p] = n
    result = set()
    for cand in points_up_to_height(height):
        sups = [_restricted_support(cand, q, excluded) for q in qs]
        if wanted is None:
            if sups[0] is not None and sups[0] == sups[1] == sups[2]:
                result.add(cand)
        else:
            if all(s is not None and s == w for s, w in zip(sups, wanted)):
                result.add(cand)
    # trivially wide cardinality cap; a violation would mean an enumeration bug
    assert _le(len(result), unit_equation_bounds(2, places.size).two_term)
    return result


def four_point_set(q1: ProjPoint, q2: ProjPoint, q3: ProjPoint, q4: ProjPoint,
                   places: PlaceSet, height: int = 50):
    """Points equidistant from q1,q2 and from q3,q4 at every good prime."""
    qs = (q1, q2, q3, q4)
    if len(set(qs)) != 4:
        raise VerificationInputError("the four reference points must be distinct")
    excluded = set(places.finite)
    result = set()
    for cand in points_up_to_height(height):
        s1 = _restricted_support(cand, q1, excluded)
        s2 = _restricted_support(cand, q2, excluded)
        if s1 is None or s2 is None or s1 != s2:
            continue
        s3 = _restricted_support(cand, q3, excluded)
        s4 = _restricted_support(cand, q4, excluded)
        if s3 is None or s4 is None or s3 != s4:
            continue
        result.add(cand)
    cap = sum_of(unit_equation_bounds(3, places.size).n_term, exact(2))
    assert _le(len(result), cap)
    return result


def _le(count: int, bound) -> bool:
    return compare(exact(count), bound) is not Comparison.GREATER


def check_tail_count_lemmas(inv: DynamicalInventory,
                            profile: ReductionProfile) -> VerificationReport:
    """Tail counts against the period-specific caps L1, L2, L3 and L4."""
    name = "tail_count_lemmas"
    if inv.incomplete:
        return VerificationReport(name, SKIPPED, reason="inventory incomplete")
    d = inv.pair.degree
    s = profile.places.size
    caps = tail_bounds(d, s)
    by_period = {1: ("L1", caps.fixed_cycle), 2: ("L2", caps.two_cycle),
                 3: ("L3", caps.three_cycle)}
    has_fixed = any(len(c) == 1 for c in inv.cycles)
    has_two = any(len(c) == 2 for c in inv.cycles)
    failures, confirmations = [], []
    checked = 0
    for cycle in inv.cycles:
        n = len(cycle)
        count = len(inv.tails_by_target[cycle[0]])
        if n in by_period:
            label, cap = by_period[n]
            checked += 1
            if _le(count, cap):
                confirmations.append(
                    f"period {n} cycle at {_fmt(cycle[0])}: {count} tail points <= {label}({d},{s})"
                )
            else:
                failures.append(
                    f"period {n} cycle at {_fmt(cycle[0])}: {count} tail points > {label}({d},{s})"
                )
        if n == 1 and has_fixed and has_two:
            checked += 1
            if _le(count, caps.fixed_and_double):
                confirmations.append(
                    f"fixed point {_fmt(cycle[0])} with a 2-cycle present: "
                    f"{count} <= L4({d},{s})"
                )
            else:
                failures.append(
                    f"fixed point {_fmt(cycle[0])}: {count} > L4({d},{s})"
                )
    if checked == 0:
        return VerificationReport(name, SKIPPED,
                                  reason="no cycles of period 1, 2, or 3",
                                  parameters=(("d", str(d)), ("s", str(s))))
    return _finish(name, failures, confirmations, checked,
                   [("d", str(d)), ("s", str(s))])


def check_main_theorems(inv: DynamicalInventory,
                        profile: ReductionProfile) -> tuple[VerificationReport, ...]:
    """The headline counts against their bounds, one report per statement.

    Always: |preper| <= Q.  With a cycle of length >= 2: |preper| <= L.
    With three points that are tail or critical-cycle: |per| <= TPLA + 3.
    With four periodic points: |tail| + |per0| <= T.  Unmet hypotheses
    produce SKIPPED, mirroring how the statements are conditioned.
    """
    if inv.incomplete:
        reason = "inventory incomplete"
        return tuple(VerificationReport(n, SKIPPED, reason=reason)
                     for n in ("preper_bound_Q", "preper_bound_L",
                               "per_bound_three_tailish", "tail_bound_four_periodic"))
    d = inv.pair.degree
    s = profile.places.size
    agg = aggregate_bounds(d, s)
    params = (("d", str(d)), ("s", str(s)))
    reports = []

    n_preper = len(inv.preper)
    if _le(n_preper, agg.preperiodic):
        reports.append(VerificationReport(
            "preper_bound_Q", PASS,
            witnesses=(f"{n_preper} preperiodic points <= Q({d},{s})",),
            parameters=params))
    else:
        reports.append(VerificationReport(
            "preper_bound_Q", FAIL,
            witnesses=(f"{n_preper} preperiodic points > Q({d},{s})",),
            parameters=params))

    if any(len(c) >= 2 for c in inv.cycles):
        if _le(n_preper, agg.preperiodic_long_cycle):
            reports.append(VerificationReport(
                "preper_bound_L", PASS,
                witnesses=(f"{n_preper} preperiodic points <= L({d},{s})",),
                parameters=params))
        else:
            reports.append(VerificationReport(
                "preper_bound_L", FAIL,
                witnesses=(f"{n_preper} preperiodic points > L({d},{s})",),
                parameters=params))
    else:
        reports.append(VerificationReport(
            "preper_bound_L", SKIPPED,
            reason="no cycle of length >= 2", parameters=params))

    tailish = inv.tail | inv.per0
    if len(tailish) >= 3:
        cap = force_exact(agg.periodic_via_three_points) + 3
        n_per = len(inv.per)
        status = PASS if n_per <= cap else FAIL
        reports.append(VerificationReport(
            "per_bound_three_tailish", status,
            witnesses=(f"{n_per} periodic points vs 3*7^(4s)+3 = {cap}",),
            parameters=params))
    else:
        reports.append(VerificationReport(
            "per_bound_three_tailish", SKIPPED,
            reason=f"only {len(tailish)} tail-or-critical-cycle points",
            parameters=params))

    if len(inv.per) >= 4:
        cap = force_exact(agg.tail_given_four_periodic)
        n_tailish = len(inv.tail) + len(inv.per0)
        status = PASS if n_tailish <= cap else FAIL
        reports.append(VerificationReport(
            "tail_bound_four_periodic", status,
            witnesses=(f"|tail| + |critical cycle| = {n_tailish} vs 12*7^(4s) = {cap}",),
            parameters=params))
    else:
        reports.append(VerificationReport(
            "tail_bound_four_periodic", SKIPPED,
            reason=f"only {len(inv.per)} periodic points",
            parameters=params))
    return tuple(reports)


SUITE_NAMES = ("ultrametric", "nonexpansion", "chain", "tailperiodic", "critical",
           "taillemmas", "theorems")


def _derived_chains(inv: DynamicalInventory):
    """Tail trajectories of length >= 2 into each rational fixed point."""
    chains = []
    for cycle in inv.cycles:
        if len(cycle) != 1:
            continue
        p0 = cycle[0]
        for t in inv.tails_by_target.get(p0, ()):
            if inv.tail_lengths[t] < 2:
                continue
            walk = [t]
            while walk[-1] != p0:
                walk.append(inv.image[walk[-1]])
            chains.append((p0, walk))
    return chains


def run_suite(pair: HomogPair, suite: str = "all", *, height: int = 64,
              max_iters: int = 256, escape_height: int = 10**6,
              sample_height: int = 4) -> list[VerificationReport]:
    """Run one named suite (or all of them) against a map.

    Point-set checks use the preperiodic inventory plus a small grid of
    sample points; chain checks derive every available tail trajectory
    into a rational fixed point.
    """
    if suite not in SUITE_NAMES and suite != "all":
        raise VerificationInputError(f"unknown suite {suite!r}")
    profile = reduction_profile(pair)
    inv = enumerate_preperiodic(pair, height, max_iters=max_iters,
                                escape_height=escape_height)
    reports: list[VerificationReport] = []
    want = SUITE_NAMES if suite == "all" else (suite,)
    if "ultrametric" in want or "nonexpansion" in want:
        points = set(points_up_to_height(sample_height)) | set(inv.preper)
        if "ultrametric" in want:
            reports.append(check_ultrametric(points))
        if "nonexpansion" in want:
            reports.append(check_non_expansion(pair, profile, points))
    if "chain" in want:
        chains = _derived_chains(inv)
        if not chains:
            reports.append(VerificationReport(
                "chain_equality", SKIPPED,
                reason="no tail trajectory of length >= 2 into a rational fixed point"))
        else:
            for p0, walk in chains:
                reports.append(check_chain_lemma(pair, profile, p0, walk))
    if "tailperiodic" in want:
        reports.append(check_tail_periodic_distance(inv, profile))
    if "critical" in want:
        reports.append(check_critical_distance(inv, profile))
    if "taillemmas" in want:
        reports.append(check_tail_count_lemmas(inv, profile))
    if "theorems" in want:
        reports.extend(check_main_theorems(inv, profile))
    return reports
