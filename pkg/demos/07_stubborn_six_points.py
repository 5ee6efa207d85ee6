# A six-point space on which neither quotient reduction makes progress,
# even though a smaller weakly equivalent space exists one collapse away.

from finito import (
    FinitePoset,
    beat_points,
    betti_numbers,
    euler_characteristic,
    mccord_check,
    nh_suspension,
    osaki_closed_reduction,
    osaki_open_reduction,
)

x = FinitePoset.from_cover_pairs(
    6,
    [(3, 0), (4, 0), (3, 1), (4, 1), (5, 1), (4, 2), (5, 2)],
    labels=["a1", "b", "a2", "c", "d", "e"],
)
y = nh_suspension(FinitePoset.antichain(3))  # five points

print("X:", x)
print("beat points:", beat_points(x))

# open and closed reductions either do not apply or fail to shrink
for point in range(x.n):
    open_q = osaki_open_reduction(x, point)
    closed_q = osaki_closed_reduction(x, point)
    show = lambda q: "n/a" if q is None else f"{q.n} points"
    print(f"  {x.label(point)}: open {show(open_q)}, closed {show(closed_q)}")

# yet X is weakly equivalent to the 5-point suspension: the collapse of the
# two top points passes the basis-like cover criterion (in y the three
# minimal points are 0,1,2 and the tops 3,4)
collapse = [3, 4, 3, 0, 1, 2]
report = mccord_check(x, y, collapse)
print("collapse passes the cover criterion:", report.ok)
print("euler:", euler_characteristic(x), "=", euler_characteristic(y))
print("betti:", betti_numbers(x), "=", betti_numbers(y))
