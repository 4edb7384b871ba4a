"""Well-mixed dynamics over strategy-set frequencies.

Continuous replicator dynamics xdot_S = x_S (P_S - Pbar) on the simplex,
plus the discrete multiplicative map x'_S = x_S (P_S + sigma)/(Pbar + sigma)
used for the seven-set race. Fitness P_S comes from a precomputed pairwise
payoff table, so trajectories are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .tournament import PayoffTable

EXTINCTION_FLOOR = 1e-12


@dataclass
class TrajectoryRecord:
    """Sampled trajectory: times, frequency states, and mean payoff per sample."""

    times: np.ndarray  # (T,)
    states: np.ndarray  # (T, k)
    mean_payoffs: np.ndarray  # (T,)
    converged: bool
    set_names: Tuple[str, ...]


def fitness(x: np.ndarray, table: PayoffTable) -> Tuple[np.ndarray, float]:
    """Per-set fitness P[i] = sum_j x[j] * pi[i][j] and mean payoff Pbar."""
    P = table.matrix @ x
    return P, float(x @ P)


def _rhs(x: np.ndarray, A: np.ndarray) -> np.ndarray:
    P = A @ x
    return x * (P - x @ P)


def replicator_step(x: np.ndarray, table: PayoffTable, dt: float) -> np.ndarray:
    """One RK4 step of the replicator field, renormalized onto the simplex."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    A = table.matrix
    k1 = _rhs(x, A)
    k2 = _rhs(x + 0.5 * dt * k1, A)
    k3 = _rhs(x + 0.5 * dt * k2, A)
    k4 = _rhs(x + dt * k3, A)
    nxt = x + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    nxt = np.clip(nxt, 0.0, None)
    return nxt / nxt.sum()


def integrate_replicator(
    x0: np.ndarray,
    table: PayoffTable,
    dt: float = 0.01,
    t_max: float = 1e4,
    convergence_eps: float = 1e-10,
    sample_stride: int = 100,
) -> TrajectoryRecord:
    """Integrate until t_max or until the field magnitude drops below eps."""
    x = np.asarray(x0, dtype=float)
    x = np.clip(x, 0.0, None)
    x = x / x.sum()
    A = table.matrix
    times: List[float] = []
    states: List[np.ndarray] = []
    pbar: List[float] = []
    n_steps = int(round(t_max / dt))
    converged = False
    t = 0.0
    for step in range(n_steps + 1):
        if step % sample_stride == 0:
            P = A @ x
            times.append(t)
            states.append(x.copy())
            pbar.append(float(x @ P))
        if step == n_steps:
            break
        rhs = _rhs(x, A)
        if np.abs(rhs).max() < convergence_eps:
            converged = True
            if times[-1] != t:
                times.append(t)
                states.append(x.copy())
                pbar.append(float(x @ (A @ x)))
            break
        x = replicator_step(x, table, dt)
        t += dt
    return TrajectoryRecord(
        times=np.array(times),
        states=np.array(states),
        mean_payoffs=np.array(pbar),
        converged=converged,
        set_names=tuple(s.name for s in table.sets),
    )


def discrete_map_step(
    x: np.ndarray, table: PayoffTable, sigma: float
) -> np.ndarray:
    """One step of the multiplicative map with uniform payoff offset sigma."""
    P, pbar = fitness(x, table)
    shifted = P + sigma
    if np.any(shifted[x > 0] <= 0) or pbar + sigma <= 0:
        raise ValueError(
            f"offset sigma={sigma} leaves non-positive fitness; increase it"
        )
    nxt = x * shifted / (pbar + sigma)
    nxt[nxt < EXTINCTION_FLOOR] = 0.0
    return nxt / nxt.sum()


def default_offset(table: PayoffTable) -> float:
    """Uniform shift making every fitness positive: max(0, -min entry) + 1."""
    return max(0.0, -float(table.matrix.min())) + 1.0


def iterate_discrete_map(
    x0: np.ndarray,
    table: PayoffTable,
    generations: int,
    sigma: Optional[float] = None,
    sample_stride: int = 1,
) -> TrajectoryRecord:
    """Iterate the discrete map, sampling every sample_stride generations."""
    if sigma is None:
        sigma = default_offset(table)
    x = np.asarray(x0, dtype=float)
    x = x / x.sum()
    times, states, pbar = [], [], []
    for gen in range(generations + 1):
        if gen % sample_stride == 0 or gen == generations:
            _, mean = fitness(x, table)
            times.append(float(gen))
            states.append(x.copy())
            pbar.append(mean)
        if gen < generations:
            x = discrete_map_step(x, table, sigma)
    return TrajectoryRecord(
        times=np.array(times),
        states=np.array(states),
        mean_payoffs=np.array(pbar),
        converged=bool(x.max() > 0.99),
        set_names=tuple(s.name for s in table.sets),
    )


def barycentric_grid(resolution: int) -> np.ndarray:
    """Barycentric lattice with step 1/(resolution-1): rows (u, v, 1-u-v)."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    n = resolution - 1
    pts = []
    for a in range(n + 1):
        for b in range(n + 1 - a):
            pts.append((a / n, b / n, (n - a - b) / n))
    return np.array(pts)


def basin_scan(
    table: PayoffTable,
    resolution: int,
    dt: float = 0.01,
    t_max: float = 1e4,
    convergence_eps: float = 1e-9,
) -> List[Tuple[float, float, str, float]]:
    """Asymptotic winner and instantaneous mean payoff per simplex grid point.

    Only defined for three active sets. All grid points are integrated as
    one batch; each row of the result is (u, v, winner_set, P_bar) where
    (u, v) are the first two barycentric coordinates of the start point and
    P_bar is the mean payoff of that starting composition.
    """
    if len(table.sets) != 3:
        raise ValueError("basin_scan requires exactly 3 active sets")
    A = table.matrix
    X = barycentric_grid(resolution)  # (N, 3)
    pbar0 = np.einsum("ni,ij,nj->n", X, A, X)
    Y = X.copy()

    def rhs(Z):
        P = Z @ A.T
        return Z * (P - np.einsum("ni,ni->n", Z, P)[:, None])

    n_steps = int(round(t_max / dt))
    for _ in range(n_steps):
        # Batched RK4 over all grid points at once.
        k1 = rhs(Y)
        k2 = rhs(Y + 0.5 * dt * k1)
        k3 = rhs(Y + 0.5 * dt * k2)
        k4 = rhs(Y + dt * k3)
        Y = Y + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        Y = np.clip(Y, 0.0, None)
        Y /= Y.sum(axis=1, keepdims=True)
        if np.abs(rhs(Y)).max() < convergence_eps:
            break
    winners = [table.sets[i].name for i in Y.argmax(axis=1)]
    return [
        (float(X[r, 0]), float(X[r, 1]), winners[r], float(pbar0[r]))
        for r in range(X.shape[0])
    ]
