"""Orbit classification and height-bounded preperiodic point enumeration.

Periodic and tail verdicts are exact (a repeat really occurred in the
trajectory).  ESCAPED is a heuristic non-preperiodicity certificate: some
trajectory coordinate exceeded the escape bound.  UNDECIDED means neither
happened within the iteration budget; an inventory containing undecided
candidates is flagged incomplete and never silently treated as finished.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .intarith import ArithmeticInputError
from .projline import ProjPoint, point_sort_key
from .ratmap import HomogPair, critical_points_rational, evaluate

_CACHE_CAP = 2_000_000


@dataclass(frozen=True)
class OrbitClassification:
    kind: str  # periodic | tail | escaped | undecided
    trajectory: tuple[ProjPoint, ...]
    period: Optional[int] = None
    tail_length: Optional[int] = None
    cycle: Optional[tuple[ProjPoint, ...]] = None
    steps: Optional[int] = None


def _check_limits(pair: HomogPair, max_iters: int, escape_height: int):
    if pair.degree < 2:
        raise ArithmeticInputError("orbit analysis needs a map of degree at least 2")
    if max_iters < 1:
        raise ArithmeticInputError("max_iters must be positive")
    if escape_height < 1:
        raise ArithmeticInputError("escape_height must be positive")


def _make_step(pair: HomogPair):
    a, b, d = pair.a, pair.b, pair.degree

    def step(x: int, y: int) -> tuple[int, int]:
        fa, fb, ypow = a[0], b[0], 1
        for i in range(1, d + 1):
            ypow *= y
            fa = fa * x + a[i] * ypow
            fb = fb * x + b[i] * ypow
        g = math.gcd(fa, fb)
        fa //= g
        fb //= g
        if fb < 0 or (fb == 0 and fa < 0):
            fa, fb = -fa, -fb
        return fa, fb

    return step


def classify_point(pair: HomogPair, point: ProjPoint, *, max_iters: int = 256,
                   escape_height: int = 10**6) -> OrbitClassification:
    """Walk the forward orbit until a repeat, an escape, or budget exhaustion."""
    _check_limits(pair, max_iters, escape_height)
    step = _make_step(pair)
    traj = [(point.x, point.y)]
    seen = {traj[0]: 0}
    applications = 0
    while applications < max_iters:
        cur = step(*traj[-1])
        applications += 1
        j = seen.get(cur)
        if j is not None:
            points = tuple(ProjPoint(x, y) for x, y in traj)
            cycle = points[j:]
            if j == 0:
                return OrbitClassification("periodic", points, period=len(cycle),
                                           tail_length=0, cycle=cycle, steps=applications)
            return OrbitClassification("tail", points, period=len(cycle),
                                       tail_length=j, cycle=cycle, steps=applications)
        if abs(cur[0]) > escape_height or cur[1] > escape_height:
            traj.append(cur)
            points = tuple(ProjPoint(x, y) for x, y in traj)
            return OrbitClassification("escaped", points, steps=applications)
        seen[cur] = len(traj)
        traj.append(cur)
    points = tuple(ProjPoint(x, y) for x, y in traj)
    return OrbitClassification("undecided", points, steps=applications)


@dataclass(frozen=True)
class DynamicalInventory:
    pair: HomogPair
    search_height: int
    max_iters: int
    escape_height: int
    preper: frozenset[ProjPoint]
    per: frozenset[ProjPoint]
    tail: frozenset[ProjPoint]
    per0: frozenset[ProjPoint]
    cycles: tuple[tuple[ProjPoint, ...], ...]
    tails_by_target: dict[ProjPoint, tuple[ProjPoint, ...]]
    tail_lengths: dict[ProjPoint, int]
    image: dict[ProjPoint, ProjPoint]
    incomplete: bool
    undecided: tuple[ProjPoint, ...]


def enumerate_preperiodic(pair: HomogPair, height: int = 1024, *,
                          max_iters: int = 256,
                          escape_height: int = 10**6) -> DynamicalInventory:
    """Classify every canonical point up to the height bound.

    The returned preperiodic set also contains all forward images of found
    preperiodic points, even above the height bound.  A shared cache lets a
    candidate reuse verdicts from earlier trajectories; cached escape facts
    may resolve points the standalone budget would leave undecided, never
    the other way around.
    """
    _check_limits(pair, max_iters, escape_height)
    if height < 1:
        raise ArithmeticInputError("height must be positive")
    step = _make_step(pair)

    cycles: list[tuple[tuple[int, int], ...]] = []
    preper_map: dict[tuple[int, int], tuple[int, int]] = {}  # point -> (tail_len, cycle id)
    escaped: set[tuple[int, int]] = set()  # speed only, capped
    undecided: list[tuple[int, int]] = []

    def settle_tails(traj: list[tuple[int, int]], m: int, cid: int):
        # the successor of traj[-1] is known preperiodic with tail length m
        for offset, pt in enumerate(reversed(traj)):
            preper_map[pt] = (m + offset + 1, cid)

    def settle_escaped(traj: list[tuple[int, int]]):
        if len(escaped) < _CACHE_CAP:
            escaped.update(traj)

    def walk(start: tuple[int, int]):
        if start in preper_map or start in escaped:
            return
        traj = [start]
        seen = {start: 0}
        applications = 0
        while applications < max_iters:
            cur = step(*traj[-1])
            applications += 1
            fact = preper_map.get(cur)
            if fact is not None:
                settle_tails(traj, fact[0], fact[1])
                return
            if cur in escaped:
                settle_escaped(traj)
                return
            j = seen.get(cur)
            if j is not None:
                cid = len(cycles)
                cycle = tuple(traj[j:])
                cycles.append(cycle)
                for pt in cycle:
                    preper_map[pt] = (0, cid)
                if j > 0:
                    settle_tails(traj[:j], 0, cid)
                return
            if abs(cur[0]) > escape_height or cur[1] > escape_height:
                traj.append(cur)
                settle_escaped(traj)
                return
            seen[cur] = len(traj)
            traj.append(cur)
        undecided.append(start)

    walk((1, 0))
    for y in range(1, height + 1):
        for x in range(-height, height + 1):
            if math.gcd(x, y) == 1:
                walk((x, y))

    # assemble, with canonical cycle rotations and deterministic ordering
    cycle_points = [tuple(ProjPoint(x, y) for x, y in c) for c in cycles]
    rotated = []
    for cyc in cycle_points:
        k = min(range(len(cyc)), key=lambda i: point_sort_key(cyc[i]))
        rotated.append(cyc[k:] + cyc[:k])
    order = sorted(range(len(rotated)), key=lambda i: point_sort_key(rotated[i][0]))
    renumber = {old: new for new, old in enumerate(order)}
    final_cycles = tuple(rotated[i] for i in order)

    per = frozenset(p for cyc in final_cycles for p in cyc)
    preper_pts = {}
    for (x, y), (tl, cid) in preper_map.items():
        preper_pts[ProjPoint(x, y)] = (tl, renumber[cid])
    preper = frozenset(preper_pts)
    tail = preper - per
    tail_lengths = {p: tl for p, (tl, _) in preper_pts.items() if tl > 0}

    crit = set(critical_points_rational(pair))
    per0_cycles = [cyc for cyc in final_cycles if crit.intersection(cyc)]
    per0 = frozenset(p for cyc in per0_cycles for p in cyc)

    tails_by: dict[ProjPoint, list[ProjPoint]] = {p: [] for p in per}
    for p, (tl, cid) in preper_pts.items():
        if tl > 0:
            for target in final_cycles[cid]:
                tails_by[target].append(p)
    tails_by_target = {
        p: tuple(sorted(ts, key=point_sort_key)) for p, ts in tails_by.items()
    }

    image = {}
    for cyc in final_cycles:
        for i, p in enumerate(cyc):
            image[p] = cyc[(i + 1) % len(cyc)]
    for p in tail:
        image[p] = evaluate(pair, p)

    return DynamicalInventory(
        pair=pair,
        search_height=height,
        max_iters=max_iters,
        escape_height=escape_height,
        preper=preper,
        per=per,
        tail=tail,
        per0=per0,
        cycles=final_cycles,
        tails_by_target=tails_by_target,
        tail_lengths=tail_lengths,
        image=image,
        incomplete=bool(undecided),
        undecided=tuple(sorted((ProjPoint(x, y) for x, y in undecided),
                               key=point_sort_key)),
    )


def tails_of(inventory: DynamicalInventory, point: ProjPoint) -> tuple[ProjPoint, ...]:
    """Non-periodic points whose forward orbit passes through a periodic point."""
    if point not in inventory.per:
        raise ArithmeticInputError(f"{point} is not a periodic point of this inventory")
    return inventory.tails_by_target[point]
