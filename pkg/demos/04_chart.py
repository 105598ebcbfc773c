# Free factor chart for P(2p+1, 2q+1, 2r+1) at fixed p.
#
# Each cell shows N = det(S+) and the class: S the property holds, F it
# fails, T trivial Alexander polynomial (N = 0), ? no certificate in budget.

import numpy as np

from pretzelknots.classify import chart_rows

TAG = {"satisfies": "S", "fails": "F", "trivial-Δ": "T", "unknown": "?"}

for p in (-2, -3):
    rows = chart_rows(p, 4, 10)
    grid = np.full((10, 4), "", dtype=object)
    for q, r, N, cls in rows:
        grid[r - 1, q - 1] = f"{N}{TAG[cls]}"
    print(f"\np = {p}   rows r = 1..10, columns q = 1..4")
    for r in range(10):
        print(f"{r + 1:3d}  " + " ".join(f"{c:>6s}" for c in grid[r]))

    classes = np.array([c for *_, c in rows])
    for name in TAG:
        print(f"   {name:10s} {np.sum(classes == name)}")
