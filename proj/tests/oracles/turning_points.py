"""Oracle for the gap-filling target's turning points on [-2, 2].

Roots of the symbolic derivative located with mpmath.findroot from a dense
sign-change scan.
"""
import mpmath as mp

mp.mp.dps = 40
x = mp.mpf


def g(t):
    return (mp.sin(2 * t - 4) + x("0.5") * mp.cos(5 * t - 5) + x("0.05") / ((t - 1) ** 2 + x("0.1"))
            + x("0.01") / ((t + x("0.5")) ** 2 + x("0.05")) - x("0.01") * (t ** 2 - t ** 3))


dg = lambda t: mp.diff(g, t)
grid = [x(-2) + x(4) * i / 4000 for i in range(4001)]
roots = []
for a, b in zip(grid, grid[1:]):
    if mp.sign(dg(a)) != mp.sign(dg(b)):
        roots.append(mp.findroot(dg, (a, b), solver="bisect"))
print(len(roots))
for r in roots:
    print(mp.nstr(r, 17))
