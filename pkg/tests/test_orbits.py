import pytest

from p1dyn.intarith import ArithmeticInputError
from p1dyn.mapparse import parse_map
from p1dyn.orbits import classify_point, enumerate_preperiodic, tails_of
from p1dyn.projline import INFINITY, ProjPoint, parse_point

from naive import all_points_up_to_height, naive_classify, naive_preperiodic_points


def pts(*texts):
    return frozenset(parse_point(t) for t in texts)


def test_classify_escape_example():
    res = classify_point(parse_map("z^2"), ProjPoint(2, 1))
    assert res.kind == "escaped"
    assert [p.x for p in res.trajectory[:4]] == [2, 4, 16, 256]
    assert res.trajectory[-1].x > 10**6


def test_classify_periodic_and_tail_examples():
    two_cycle = classify_point(parse_map("z^2-1"), ProjPoint(0, 1))
    assert two_cycle.kind == "periodic"
    assert two_cycle.period == 2
    assert two_cycle.cycle == (ProjPoint(0, 1), ProjPoint(-1, 1))

    tail = classify_point(parse_map("z^2"), ProjPoint(-1, 1))
    assert tail.kind == "tail"
    assert tail.tail_length == 1
    assert tail.cycle == (ProjPoint(1, 1),)

    fixed = classify_point(parse_map("z^2"), INFINITY)
    assert fixed.kind == "periodic" and fixed.period == 1


def test_classify_undecided_when_budget_too_small():
    res = classify_point(parse_map("z^2-29/16"), parse_point("3/4"), max_iters=2)
    assert res.kind == "undecided"
    assert res.steps == 2


def test_classify_validates_limits():
    pair = parse_map("z^2")
    with pytest.raises(ArithmeticInputError):
        classify_point(pair, INFINITY, max_iters=0)
    with pytest.raises(ArithmeticInputError):
        classify_point(pair, INFINITY, escape_height=0)
    with pytest.raises(ArithmeticInputError):
        classify_point(parse_map("z+1"), INFINITY)


@pytest.mark.parametrize("map_text", ["z^2", "z^2-1"])
def test_classify_agrees_with_naive_oracle_up_to_height_30(map_text):
    pair = parse_map(map_text)
    for p in all_points_up_to_height(30):
        mine = classify_point(pair, p, max_iters=64)
        kind, traj, period, tail_length, cycle, steps = naive_classify(
            pair, p, max_iters=64, escape_height=10**6
        )
        assert mine.kind == kind
        assert mine.trajectory == traj
        assert mine.period == period
        assert mine.tail_length == tail_length
        assert mine.cycle == cycle
        assert mine.steps == steps


def test_golden_inventory_z2_minus_29_16():
    inv = enumerate_preperiodic(parse_map("z^2-29/16"), 64)
    assert not inv.incomplete
    assert inv.preper == pts("inf", "-1/4", "-7/4", "5/4", "1/4", "7/4", "-5/4", "3/4", "-3/4")
    assert inv.per == pts("inf", "-1/4", "-7/4", "5/4")
    assert inv.tail == pts("1/4", "7/4", "-5/4", "3/4", "-3/4")
    assert inv.per0 == pts("inf")
    assert len(inv.cycles) == 2
    three = next(c for c in inv.cycles if len(c) == 3)
    assert three == (parse_point("-7/4"), parse_point("5/4"), parse_point("-1/4"))
    assert set(tails_of(inv, parse_point("-1/4"))) == set(pts("1/4", "7/4", "-5/4", "3/4", "-3/4"))
    assert inv.tail_lengths[parse_point("1/4")] == 1
    assert inv.tail_lengths[parse_point("3/4")] == 2
    assert inv.tail_lengths[parse_point("-3/4")] == 2
    assert tails_of(inv, INFINITY) == ()


def test_golden_inventory_squaring_map():
    inv = enumerate_preperiodic(parse_map("z^2"), 100)
    assert inv.preper == pts("0", "inf", "1", "-1")
    assert inv.per == pts("0", "1", "inf")
    assert inv.per0 == pts("0", "inf")
    assert inv.tail == pts("-1")
    assert tails_of(inv, parse_point("1")) == (parse_point("-1"),)
    assert tails_of(inv, parse_point("0")) == ()
    with pytest.raises(ArithmeticInputError):
        tails_of(inv, parse_point("-1"))


def test_golden_inventory_z2_minus_1():
    inv = enumerate_preperiodic(parse_map("z^2-1"), 100)
    assert inv.preper == pts("inf", "0", "-1", "1")
    assert inv.per == pts("inf", "0", "-1")
    assert inv.per0 == pts("inf", "0", "-1")
    assert inv.tail == pts("1")


def test_golden_inventory_z2_plus_1():
    inv = enumerate_preperiodic(parse_map("z^2+1"), 100)
    assert inv.preper == pts("inf")
    assert inv.per == pts("inf")
    assert inv.per0 == pts("inf")


def test_golden_inventory_z2_minus_2():
    inv = enumerate_preperiodic(parse_map("z^2-2"), 100)
    assert inv.preper == pts("inf", "2", "-1", "-2", "0", "1")
    assert inv.per == pts("inf", "2", "-1")
    assert inv.per0 == pts("inf")
    assert inv.tail_lengths[parse_point("0")] == 2
    assert inv.tail_lengths[parse_point("-2")] == 1


@pytest.mark.parametrize("map_text", ["z^2", "z^2-1"])
def test_inventory_agrees_with_naive_search(map_text):
    pair = parse_map(map_text)
    inv = enumerate_preperiodic(pair, 30)
    assert inv.preper == naive_preperiodic_points(pair, 30, 256, 10**6)


def test_inventory_grows_with_height():
    pair = parse_map("z^2-29/16")
    small = enumerate_preperiodic(pair, 8)
    large = enumerate_preperiodic(pair, 64)
    assert small.preper <= large.preper


def test_forward_closure_beyond_height():
    # candidates at height 1 are only -1, 0, 1, inf, but the orbit of 0 runs
    # through -2 and 2, so the closure already contains the full six points
    inv = enumerate_preperiodic(parse_map("z^2-2"), 1)
    assert inv.preper == pts("inf", "2", "-1", "-2", "0", "1")


def test_preimage_counts_bounded_by_degree():
    for text in ("z^2", "z^2-1", "z^2-2", "z^2-29/16"):
        pair = parse_map(text)
        inv = enumerate_preperiodic(pair, 64)
        for target in inv.preper:
            fibre = [p for p in inv.preper if inv.image[p] == target]
            assert len(fibre) <= pair.degree


def test_incomplete_inventory_is_flagged():
    inv = enumerate_preperiodic(parse_map("z^2-29/16"), 4, max_iters=2)
    assert inv.incomplete
    assert parse_point("3/4") in inv.undecided


def test_image_map_is_consistent_with_evaluate():
    from p1dyn.ratmap import evaluate

    inv = enumerate_preperiodic(parse_map("z^2-29/16"), 64)
    for p in inv.preper:
        assert inv.image[p] == evaluate(inv.pair, p)
        assert inv.image[p] in inv.preper
