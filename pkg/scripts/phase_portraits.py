#!/usr/bin/env python3
"""Well-mixed phase data: replicator trajectories, basin scans, 7-set map.

Emits, for w in {0.1, 1, 10} at b=3: a barycenter trajectory and a
resolution-50 basin scan over the three 2-sets, and the discrete-map
trajectory over all seven sets.
"""

import os
import sys

from hypergame.cli import main

OUT = os.environ.get("HYPERGAME_OUTPUT_ROOT", "runs")

if __name__ == "__main__":
    rc = 0
    for w in ("0.1", "1", "10"):
        rc |= main([
            "replicator", "--mode", "pairs", "--b", "3", "--w", w,
            "--basin-resolution", "50", "--out", f"{OUT}/phases/replicator-w{w}",
        ])
        rc |= main([
            "map7", "--b", "3", "--w", w, "--generations", "10000",
            "--out", f"{OUT}/phases/map7-w{w}",
        ])
    sys.exit(rc)
