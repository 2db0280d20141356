import pytest

from greedysweep.exact_geom import Point, Q
from greedysweep.greedy_driver import extend_from_wall, initial_segment
from greedysweep.horizontal_sweep import Arc, WallRun, build_sweep
from greedysweep.jordan_curve import GeometryError, PointOnJ, VSegment
from greedysweep.swept_region import AttachMismatch, Wall, init_region, max_wall, splice_cycles, splice_merge


@pytest.fixture
def region(triangle, seed):
    return init_region(build_sweep(triangle, initial_segment(triangle, seed), 1), seed)


def lengths(r):
    return {(w.x, w.length) for w in r.walls.values()}


def test_init_region(region):
    assert len(region.cycles) == 1
    assert lengths(region) == {(Q("4/5"), Q("28/15")), (5, Q("7/6"))}
    assert region.area == Q("1267/100")
    assert max_wall(region).length == Q("28/15")
    assert [w.length for w in region.wall_index] == [Q("28/15"), Q("7/6")]


def test_contains(region):
    assert region.contains(Point.of(3, 2))
    assert not region.contains(Point.of(-5, 40))
    for w in region.walls.values():
        assert not region.contains(w.seg.lo)
        assert not region.contains(w.seg.hi)


def test_attach_second_sweep(triangle, region):
    u1 = max_wall(region)
    t2, _ = extend_from_wall(triangle, region, u1)
    splice_merge(region, build_sweep(triangle, t2, 2), u1)
    assert len(region.cycles) == 1
    assert lengths(region) == {(5, Q("7/6")), (Q("32/75"), Q("224/225"))}
    assert region.area == Q("1267/100") + Q("18032/33750")
    assert region.contains(Point.of("1/2", 1))


def test_attach_rejects_wrong_wall(triangle, region):
    u1 = max_wall(region)
    other = next(w for w in region.walls.values() if w is not u1)
    t2, _ = extend_from_wall(triangle, region, u1)
    with pytest.raises(AttachMismatch):
        region.attach(build_sweep(triangle, t2, 2), other)


def test_wall_order_ties():
    def wall(i, x):
        return Wall(VSegment(Q(x), Q(0), Q(2)), i, 1, 1, "left")

    from greedysweep.swept_region import wall_order_key

    walls = [wall(1, 3), wall(2, 1)]
    assert min(walls, key=wall_order_key).x == 1


# -- cycle surgery on hand-built piece lists ------------------------------

def pj(x, y):
    return PointOnJ(0, Q(0), Point.of(x, y))


SEG = VSegment(Q(0), Q(0), Q(1))
LO, HI = pj(0, 0), pj(0, 1)


def closed(pieces):
    return all(p.end == q.start for p, q in zip(pieces, pieces[1:] + pieces[:1]))


def test_splice_same_cycle_splits():
    x = Arc((pj(5, 5), LO))
    y = Arc((HI, pj(3, 4), HI))
    z = Arc((LO, pj(5, 5)))
    cycle = [x, WallRun(SEG, True), y, WallRun(SEG, False), z]
    assert closed(cycle)
    inner, outer = splice_cycles(cycle, 1, None, 3)
    assert inner == [y]
    assert outer == [Arc((LO, pj(5, 5), LO))]
    assert closed(inner) and closed(outer)


def test_splice_two_cycles_merges():
    a = [Arc((HI, pj(-1, 0), LO)), WallRun(SEG, True)]
    b = [Arc((LO, pj(1, 0), HI)), WallRun(SEG, False)]
    assert closed(a) and closed(b)
    (merged,) = splice_cycles(a, 1, b, 1)
    assert merged == [Arc((HI, pj(-1, 0), LO, pj(1, 0), HI))]


def test_splice_needs_opposite_directions():
    a = [Arc((HI, pj(-1, 0), LO)), WallRun(SEG, True)]
    with pytest.raises(GeometryError):
        splice_cycles(a, 1, list(a), 1)
    with pytest.raises(GeometryError):
        splice_cycles(a, 0, list(a), 1)
