"""Asynchronous imitation dynamics on a periodic square lattice.

Each site holds one strategy set; edge payoffs are the precomputed
stationary introspection payoffs, so one update attempt compares the
von Neumann neighborhood averages E_X and E_Y and imitates with Fermi
probability at selection temperature K. The inner loop is jitted; RNG is
splitmix64 so results are bit-identical across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numba import njit

from .game import StrategySet
from .rng import next_unit, seed_to_state
from .tournament import PayoffTable


@dataclass(frozen=True)
class LatticeConfig:
    """Run settings for one lattice experiment (all replicates)."""

    width: int = 100
    height: int = 100
    K: float = 0.1
    steps: int = 10_000_000
    seed: int = 0
    replicates: int = 10
    snapshot_times: Tuple[int, ...] = ()
    steps_are_sweeps: bool = False  # interpret `steps` as full sweeps instead

    def __post_init__(self) -> None:
        if self.width < 2 or self.height < 2:
            raise ValueError("lattice must be at least 2x2")
        if self.K <= 0:
            raise ValueError("selection temperature K must be positive")
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")

    @property
    def total_attempts(self) -> int:
        n = self.width * self.height
        return self.steps * n if self.steps_are_sweeps else self.steps


@dataclass
class LatticeResult:
    """Per-replicate fraction time series, snapshots, and final grids."""

    set_names: Tuple[str, ...]
    fractions: np.ndarray  # (replicates, samples, k); sampled once per sweep
    final_grids: np.ndarray  # (replicates, height, width) int8
    snapshots: List[List[np.ndarray]]  # per replicate, per requested time
    snapshot_times: Tuple[int, ...]
    replicate_seeds: Tuple[int, ...]


def init_lattice(width: int, height: int, n_sets: int, seed: int) -> np.ndarray:
    """Uniform random assignment of set indices, deterministic given seed."""
    return _init_kernel(height, width, n_sets, seed_to_state(seed))


@njit(cache=True)
def _init_kernel(height, width, n_sets, state):
    grid = np.empty((height, width), dtype=np.int8)
    for r in range(height):
        for c in range(width):
            u, state = next_unit(state)
            grid[r, c] = min(int(u * n_sets), n_sets - 1)
    return grid


@njit(cache=True, inline="always")
def _site_payoff(grid, r, c, payoff, height, width):
    s = grid[r, c]
    up = grid[r - 1 if r > 0 else height - 1, c]
    down = grid[r + 1 if r < height - 1 else 0, c]
    left = grid[r, c - 1 if c > 0 else width - 1]
    right = grid[r, c + 1 if c < width - 1 else 0]
    return 0.25 * (payoff[s, up] + payoff[s, down] + payoff[s, left] + payoff[s, right])


def cell_payoff(grid: np.ndarray, node: Tuple[int, int], table: PayoffTable) -> float:
    """Mean stationary payoff of one site against its four neighbors."""
    h, w = grid.shape
    return float(_site_payoff(grid, node[0], node[1], table.matrix, h, w))


@njit(cache=True)
def _mc_step_kernel(grid, payoff, K, state, height, width):
    """One asynchronous update attempt; returns (changed_cell_flat or -1, state)."""
    u, state = next_unit(state)
    idx = min(int(u * height * width), height * width - 1)
    r = idx // width
    c = idx % width
    u, state = next_unit(state)
    d = min(int(u * 4), 3)
    if d == 0:
        nr, nc = (r - 1 if r > 0 else height - 1), c
    elif d == 1:
        nr, nc = (r + 1 if r < height - 1 else 0), c
    elif d == 2:
        nr, nc = r, (c - 1 if c > 0 else width - 1)
    else:
        nr, nc = r, (c + 1 if c < width - 1 else 0)
    ex = _site_payoff(grid, r, c, payoff, height, width)
    ey = _site_payoff(grid, nr, nc, payoff, height, width)
    z = (ey - ex) / K
    if z >= 0.0:
        prob = 1.0 / (1.0 + np.exp(-z))
    else:
        e = np.exp(z)
        prob = e / (1.0 + e)
    u, state = next_unit(state)
    changed = -1
    if u < prob and grid[r, c] != grid[nr, nc]:
        grid[r, c] = grid[nr, nc]
        changed = idx
    return changed, state


class MutableRngState:
    """Tiny holder so Python-level mc_step can thread the splitmix64 state."""

    def __init__(self, seed: int):
        self.state = seed_to_state(seed)


def mc_step(grid: np.ndarray, table: PayoffTable, K: float, rng: MutableRngState) -> int:
    """One in-place update attempt; returns the flat index changed, or -1."""
    h, w = grid.shape
    changed, state = _mc_step_kernel(grid, table.matrix, K, rng.state, h, w)
    rng.state = np.uint64(state)
    return int(changed)


@njit(cache=True)
def _run_kernel(grid, payoff, K, steps, state, sample_stride, snap_steps):
    height, width = grid.shape
    n = height * width
    k = payoff.shape[0]
    counts = np.zeros(k, dtype=np.int64)
    for r in range(height):
        for c in range(width):
            counts[grid[r, c]] += 1
    n_samples = steps // sample_stride + 1
    fractions = np.empty((n_samples, k))
    fractions[0] = counts / n
    snaps = np.empty((len(snap_steps), height, width), dtype=np.int8)
    snap_ptr = 0
    sample_ptr = 1
    for t in range(1, steps + 1):
        u, state = next_unit(state)
        idx = min(int(u * n), n - 1)
        r = idx // width
        c = idx % width
        u, state = next_unit(state)
        d = min(int(u * 4), 3)
        if d == 0:
            nr, nc = (r - 1 if r > 0 else height - 1), c
        elif d == 1:
            nr, nc = (r + 1 if r < height - 1 else 0), c
        elif d == 2:
            nr, nc = r, (c - 1 if c > 0 else width - 1)
        else:
            nr, nc = r, (c + 1 if c < width - 1 else 0)
        s_new = grid[nr, nc]
        s_old = grid[r, c]
        if s_new != s_old:
            ex = _site_payoff(grid, r, c, payoff, height, width)
            ey = _site_payoff(grid, nr, nc, payoff, height, width)
            z = (ey - ex) / K
            if z >= 0.0:
                prob = 1.0 / (1.0 + np.exp(-z))
            else:
                e = np.exp(z)
                prob = e / (1.0 + e)
            u, state = next_unit(state)
            if u < prob:
                grid[r, c] = s_new
                counts[s_old] -= 1
                counts[s_new] += 1
        else:
            # Imitating one's own set is a no-op, but the acceptance draw
            # is still consumed so the stream does not depend on the grid.
            u, state = next_unit(state)
        if snap_ptr < len(snap_steps) and t == snap_steps[snap_ptr]:
            snaps[snap_ptr] = grid
            snap_ptr += 1
        if t % sample_stride == 0 and sample_ptr < n_samples:
            fractions[sample_ptr] = counts / n
            sample_ptr += 1
    return fractions[:sample_ptr], snaps, grid


def run_lattice(cfg: LatticeConfig, table: PayoffTable) -> LatticeResult:
    """Run all replicates; replicate r uses seed = cfg.seed + r."""
    k = len(table.sets)
    stride = cfg.width * cfg.height
    steps = cfg.total_attempts
    snap_steps = np.array(sorted(t for t in cfg.snapshot_times if t <= steps), dtype=np.int64)
    all_fracs = []
    all_grids = []
    all_snaps: List[List[np.ndarray]] = []
    seeds = tuple(cfg.seed + r for r in range(cfg.replicates))
    for seed in seeds:
        grid = init_lattice(cfg.width, cfg.height, k, seed)
        fracs, snaps, final = _run_kernel(
            grid, table.matrix, float(cfg.K), steps, seed_to_state(seed) + np.uint64(0x5EED),
            stride, snap_steps,
        )
        all_fracs.append(fracs)
        all_grids.append(final.copy())
        all_snaps.append([snaps[i].copy() for i in range(len(snap_steps))])
    return LatticeResult(
        set_names=tuple(s.name for s in table.sets),
        fractions=np.stack(all_fracs),
        final_grids=np.stack(all_grids),
        snapshots=all_snaps,
        snapshot_times=tuple(int(t) for t in snap_steps),
        replicate_seeds=seeds,
    )


def write_pgm(grid: np.ndarray, path: str, max_index: int) -> None:
    """Plain PGM (P2) snapshot: one set index per cell."""
    h, w = grid.shape
    lines = ["P2", f"{w} {h}", str(max(max_index, 1))]
    for r in range(h):
        lines.append(" ".join(str(int(v)) for v in grid[r]))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
