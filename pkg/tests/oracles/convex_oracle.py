"""Brute-force greedy sweep for CONVEX polygons, in plain fractions.

On a convex face every vertical chord is bounded by exactly one edge above
and one below, so walls only ever appear at the ends of a sweep and the
sweep area is an integral of a piecewise-linear chord length.  That makes a
tiny, obviously-correct simulator, independent of the package under test.
"""
from fractions import Fraction as F


def _ys_at(poly, x):
    ys = []
    n = len(poly)
    for i in range(n):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % n]
        if min(ax, bx) <= x <= max(ax, bx):
            ys.append(ay + (by - ay) * (x - ax) / (bx - ax))
    return ys


def chord(poly, x):
    ys = _ys_at(poly, x)
    return min(ys), max(ys)


def hit(poly, y, x0, direction):
    xs = []
    n = len(poly)
    for i in range(n):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % n]
        if min(ay, by) <= y <= max(ay, by):
            x = ax + (bx - ax) * (y - ay) / (by - ay)
            if (x - x0) * direction > 0:
                xs.append(x)
    return min(xs) if direction > 0 else max(xs)


def slab_area(poly, a, b):
    cuts = sorted({a, b} | {vx for vx, _ in poly if a < vx < b})
    total = F(0)
    for lo, hi in zip(cuts, cuts[1:]):
        l0, h0 = chord(poly, lo)
        l1, h1 = chord(poly, hi)
        total += ((h0 - l0) + (h1 - l1)) / 2 * (hi - lo)
    return total


def shoelace(poly):
    n = len(poly)
    s = sum(poly[i][0] * poly[(i + 1) % n][1] - poly[(i + 1) % n][0] * poly[i][1] for i in range(n))
    return abs(s) / 2


def simulate(poly, seed, eps, max_sweeps=10_000):
    sx, sy = seed
    x_lo = hit(poly, sy, sx, -1)
    x_hi = hit(poly, sy, sx, +1)
    steps = [("t", sy, x_lo, x_hi)]
    area = slab_area(poly, x_lo, x_hi)
    # wall: (x, y_lo, y_hi, extension direction)
    walls = []
    for x, d in ((x_lo, -1), (x_hi, +1)):
        lo, hi = chord(poly, x)
        if hi > lo:
            walls.append((x, lo, hi, d))
    used = []
    while walls and len(steps) < max_sweeps:
        if eps and max(w[2] - w[1] for w in walls) < eps:
            break
        w = min(walls, key=lambda w: (-(w[2] - w[1]), w[0], w[1]))
        walls.remove(w)
        used.append(w[2] - w[1])
        x, lo, hi, d = w
        my = (lo + hi) / 2
        xf = hit(poly, my, x, d)
        a, b = sorted((x, xf))
        steps.append(("t", my, a, b))
        area += slab_area(poly, a, b)
        flo, fhi = chord(poly, xf)
        if fhi > flo:
            walls.append((xf, flo, fhi, d))
    return steps, walls, used, area


if __name__ == "__main__":
    tri = [(F(0), F(0)), (F(6), F(1)), (F(2), F(5))]
    steps, walls, used, area = simulate(tri, (F(3), F(2)), F(1, 2))
    for s in steps:
        print(s)
    print("used", used)
    print("final walls", walls)
    print("area", area, "deficit", shoelace(tri) - area, float(shoelace(tri) - area))
    print("init area", slab_area(tri, F(4, 5), F(5)))
    prev = None
    for k in range(1, 8):
        eps = F(1, 2 ** k)
        st, wl, _, ar = simulate(tri, (F(3), F(2)), eps)
        d = shoelace(tri) - ar
        print(eps, len(st), d, float(d), float(d / prev) if prev else None, max(w[2] - w[1] for w in wl))
        prev = d
