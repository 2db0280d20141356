import random

import pytest

import expected_triangle as ex
from greedysweep.exact_geom import Point, Q
from greedysweep.generators import default_seed, gen_polygon
from greedysweep.greedy_driver import (
    Config,
    Halted,
    HaltReason,
    OnWall,
    SeedOnCurve,
    UnboundedFace,
    extend_from_wall,
    initial_segment,
    run,
    step,
)
from greedysweep.horizontal_sweep import OnJ, build_sweep
from greedysweep.jordan_curve import GeometryError, Polygon, VSegment
from greedysweep.swept_region import init_region


def test_exact_trace(triangle, seed):
    res = run(triangle, seed, Config(eps=Q("1/2")))
    segs = [res.initial_sweep.t] + [r.t for r in res.trace]
    assert [(t.y, t.x_lo, t.x_hi) for t in segs] == ex.SEGMENTS
    assert {(w.x, w.length) for w in res.initial_walls} == ex.INITIAL_WALLS
    assert [r.wall_used.length for r in res.trace] == ex.WALLS_USED
    new = [next(w for w in r.walls_added if w.length != r.wall_used.length) for r in res.trace]
    assert [(w.x, w.length) for w in new] == ex.NEW_WALLS
    assert {(w.x, w.length) for w in res.region.walls.values()} == ex.FINAL_WALLS
    assert res.sweep_count == 5
    assert res.halt_reason is HaltReason.EPSILON_REACHED
    assert res.region.area == ex.FINAL_AREA


def test_each_step_swaps_one_wall(triangle, seed):
    res = run(triangle, seed, Config(eps=Q("1/2")))
    for r in res.trace:
        assert [w.id for w in r.walls_removed] == [r.wall_used.id]
        assert len(r.walls_added) == 1
        assert isinstance(r.terminus, OnJ)
        assert r.cycle_event == "none"


@pytest.mark.parametrize(
    "cfg, sweeps, reason",
    [
        (Config(eps=Q(1)), 3, HaltReason.EPSILON_REACHED),
        (Config(max_steps=2), 2, HaltReason.MAX_STEPS),
        (Config(eps=Q(10)), 1, HaltReason.EPSILON_REACHED),
    ],
)
def test_halting(triangle, seed, cfg, sweeps, reason):
    res = run(triangle, seed, cfg)
    assert (res.sweep_count, res.halt_reason) == (sweeps, reason)


def test_eps_one_walls(triangle, seed):
    res = run(triangle, seed, Config(eps=Q(1)))
    assert {w.length for w in res.region.walls.values()} == {Q("224/225"), Q("35/72")}


def test_initial_segment(triangle):
    t = initial_segment(triangle, Point.of(3, 2))
    assert (t.y, t.x_lo, t.x_hi) == (2, Q("4/5"), 5)
    assert t.lo_end.at.edge_index == 2 and t.hi_end.at.edge_index == 1


def test_seed_errors(triangle):
    with pytest.raises(UnboundedFace):
        run(triangle, Point.of(10, 10))
    with pytest.raises(SeedOnCurve):
        run(triangle, Point.of(3, "1/2"))


def test_extend_examples(triangle, seed):
    r = init_region(build_sweep(triangle, initial_segment(triangle, seed), 1), seed)
    u1 = r.max_wall()
    t, term = extend_from_wall(triangle, r, u1)
    assert (t.y, t.x_lo, t.x_hi) == (Q("16/15"), Q("32/75"), Q("4/5"))
    assert isinstance(term, OnJ) and term.at.edge_index == 2
    w5 = next(w for w in r.walls.values() if w.x == 5)
    t, term = extend_from_wall(triangle, r, w5)
    assert (t.y, t.x_lo, t.x_hi) == (Q("17/12"), 5, Q("67/12"))
    assert term.at.edge_index == 1


def test_extension_stops_at_a_facing_wall(triangle, seed):
    r = init_region(build_sweep(triangle, initial_segment(triangle, seed), 1), seed)
    u1 = r.max_wall()
    blocker = r._add_wall(VSegment(Q("1/2"), Q("1/2"), Q(2)), "left", 1, 1)
    t, term = extend_from_wall(triangle, r, u1)
    assert term == OnWall(blocker.id, Point.of("1/2", "16/15"))
    assert (t.x_lo, t.x_hi) == (Q("1/2"), Q("4/5"))
    blocker.swept_side = "right"
    with pytest.raises(GeometryError):
        extend_from_wall(triangle, r, u1)


def test_empty_wall_set_halts_at_once():
    # the seed's horizontal runs vertex to vertex, so both end walls vanish
    diamond = Polygon(((0, 0), (2, -1), (4, 0), (3, 1)))
    res = run(diamond, Point.of(2, 0), Config())
    assert not res.initial_walls
    assert res.region.area == 4
    assert res.halt_reason is HaltReason.EMPTY_WALL_SET
    assert res.trace == []
    assert isinstance(step(diamond, res.region, Config()), Halted)


def test_config_validation():
    with pytest.raises(ValueError):
        Config(eps=Q(-1))
    with pytest.raises(ValueError):
        Config(max_steps=0)
    with pytest.raises(ValueError):
        Config(strategy="bfs")


def test_tree(triangle, seed):
    res = run(triangle, seed, Config(eps=Q("1/8")))
    assert len(res.tree) == res.sweep_count
    for r in res.trace:
        assert r.parent_step < r.step
    assert res.tree.depth(1) == 0
    assert max(res.tree.depth(k) for k in res.tree.nodes) >= 2


@pytest.mark.parametrize("strategy", ["fifo", "lifo", "random"])
def test_other_strategies(strategy):
    J = gen_polygon("comb", 16, 0)
    s = default_seed("comb", 16, 0)
    cfg = Config(max_steps=60, strategy=strategy, random_seed=3)
    a, b = run(J, s, cfg), run(J, s, cfg)
    assert [r.wall_used.key for r in a.trace] == [r.wall_used.key for r in b.trace]
    areas = [a.initial_sweep.area] + [r.area_after for r in a.trace]
    assert all(x < y for x, y in zip(areas, areas[1:]))


def test_fifo_and_lifo_pick_by_age(triangle, seed):
    for strategy, pick in (("fifo", min), ("lifo", max)):
        res = run(triangle, seed, Config(max_steps=8, strategy=strategy))
        live = {w.id: w for w in res.initial_walls}
        for r in res.trace:
            assert r.wall_used.id == pick(live)
            for w in r.walls_removed:
                live.pop(w.id)
            live.update((w.id, w) for w in r.walls_added)


def test_random_seed_changes_order():
    J = gen_polygon("star", 32, 4)
    s = default_seed("star", 32, 4)
    orders = {
        tuple(r.wall_used.key for r in run(J, s, Config(max_steps=30, strategy="random", random_seed=k)).trace)
        for k in range(4)
    }
    assert len(orders) > 1


def test_greedy_needs_no_rng(triangle, seed):
    assert random.Random(0).random() == random.Random(0).random()
    res = run(triangle, seed, Config(eps=Q("1/2"), random_seed=99))
    assert res.sweep_count == 5
