#!/usr/bin/env python3
"""Full-scale lattice runs: 100x100, 1e7 attempts, K=0.1, 10 replicates.

Covers the five qualitative regimes: {D,L} and {C,L} fixation with three
sets (w=0.1, w=10) and loner / cooperator / {C,L} dominance with seven
sets (w=0.1, 3, 10). Snapshots at 0, 1e5, 1e6, and 1e7 attempts.
"""

import os
import sys

from hypergame.cli import main

OUT = os.environ.get("HYPERGAME_OUTPUT_ROOT", "runs")
SNAPS = ["0", "100000", "1000000", "10000000"]

POINTS = [("pairs", "0.1"), ("pairs", "10"), ("all", "0.1"), ("all", "3"), ("all", "10")]

if __name__ == "__main__":
    rc = 0
    for mode, w in POINTS:
        rc |= main([
            "lattice", "--mode", mode, "--b", "3", "--w", w, "--K", "0.1",
            "--steps", "10000000", "--replicates", "10", "--seed", "1000",
            "--snapshot-times", *SNAPS,
            "--out", f"{OUT}/lattice/{mode}-w{w}",
        ])
    sys.exit(rc)
