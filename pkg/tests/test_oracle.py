from fractions import Fraction as F

import convex_oracle as oracle
import expected_triangle as ex

TRI = [(F(0), F(0)), (F(6), F(1)), (F(2), F(5))]


def test_oracle_reproduces_frozen_values():
    steps, walls, used, area = oracle.simulate(TRI, ex.SEED, ex.EPS)
    assert [s[1:] for s in steps] == ex.SEGMENTS
    assert used == ex.WALLS_USED
    assert {(w[0], w[2] - w[1]) for w in walls} == ex.FINAL_WALLS
    assert area == ex.FINAL_AREA
    assert oracle.shoelace(TRI) == ex.POLYGON_AREA
    assert oracle.slab_area(TRI, F(4, 5), F(5)) == ex.INIT_AREA
    assert ex.POLYGON_AREA - ex.FINAL_AREA == ex.DEFICIT


def test_oracle_sweep_counts():
    for eps, count in ex.SWEEPS_BY_EPS.items():
        steps, *_ = oracle.simulate(TRI, ex.SEED, eps)
        assert len(steps) == count


def test_oracle_chord():
    assert oracle.chord(TRI, F(3)) == (F(1, 2), F(4))
