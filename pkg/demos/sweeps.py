"""Exhaustive sweeps of the claim catalog over small spaces.

Pass ``--quick`` to stop at two points.
"""

import sys

from fintop.sweep import CATALOG, sweep

n = 2 if "--quick" in sys.argv else 3
for tid in CATALOG:
    r = sweep(tid, max_points=n)
    status = "ok" if r.ok else "PROBLEM"
    print(f"{tid.value:28} {r.instances:>12} instances  holds {r.holds:>10}  fails {r.fails:>6}  "
          f"{r.elapsed_s:5.1f}s  {r.method:5}  {status}")
