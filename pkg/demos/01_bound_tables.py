"""
Which vertex bound wins where
=============================

Every bound is a function of the chromatic number ``chi`` and the
odd-girth parameter ``k``.  Evaluate them exactly and pick the best one
on a grid.
"""

from sysbounds.bounds import CATALOG_ORDER, TABLE1, TABLE2, BoundParams, best_bound, evaluate

# A single point: raw values are exact fractions, the usable bound is the ceiling.
p = BoundParams(chi=3, k=2)
for bid in CATALOG_ORDER:
    v = evaluate(bid, p)
    print(f"{bid.label:6} {bid.value:15} {v.raw_str():>6} -> {v.floor_int}")

# The winner over a catalog compares raw values; ties go to the later entry.
print("table-1 winner at (3, 2):", best_bound(p, TABLE1)[0].label)
print("table-2 winner at (6, 4):", best_bound((6, 4), TABLE2)[0].label)

# A small grid, one row per chi.
ks = range(2, 8)
print("chi  " + " ".join(f"k={k:<4}" for k in ks))
for chi in range(3, 9):
    row = [best_bound((chi, k), TABLE2)[0].label for k in ks]
    print(f"{chi:<4} " + " ".join(f"{c:6}" for c in row))
