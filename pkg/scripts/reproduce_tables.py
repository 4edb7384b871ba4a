#!/usr/bin/env python3
"""Regenerate the pairwise payoff tables and combined-score rankings.

Writes one run directory per (w, mode) block under OUT (default ./runs),
rounded to 4 decimals for side-by-side comparison with the published
tables, plus a full-precision sweep CSV.
"""

import os
import sys

from hypergame.cli import main

OUT = os.environ.get("HYPERGAME_OUTPUT_ROOT", "runs")

if __name__ == "__main__":
    rc = 0
    for w in ("0.1", "1", "10"):
        for mode in ("pairs", "all"):
            for b in ("1.5", "2", "3", "4", "5"):
                rc |= main([
                    "tournament", "--mode", mode, "--b", b, "--w", w, "--round", "4",
                    "--out", f"{OUT}/tables/w{w}-{mode}-b{b}",
                ])
    rc |= main(["sweep", "--mode", "pairs", "--out", f"{OUT}/tables/sweep"])
    sys.exit(rc)
