"""Introspection-dynamics Markov chain between two strategy sets.

One player at a time considers a random alternative strategy from its own
set and adopts it with Fermi probability based on the hypothetical payoff
change. For finite introspection strength the chain over joint strategy
states has a unique stationary distribution, which yields the expected
payoff of each strategy set against the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numba import njit

from .game import GameParams, StrategySet, base_payoff
from .rng import next_unit, seed_to_state

STATIONARY_RESIDUAL_TOL = 1e-10


class StationarySolveError(RuntimeError):
    """Raised when no stationary vector meets the residual tolerance."""


@dataclass(frozen=True)
class IntrospectionConfig:
    """Fast-timescale settings: w is the introspection strength (>= 0)."""

    w: float = 1.0

    def __post_init__(self) -> None:
        if not (self.w >= 0 and math.isfinite(self.w)):
            raise ValueError(f"introspection strength w must be finite and >= 0, got {self.w}")


def fermi(delta_pi: float, w: float) -> float:
    """Fermi acceptance probability 1/(1+exp(-w*delta_pi)), overflow-safe."""
    z = w * delta_pi
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def payoff_matrices(S1: StrategySet, S2: StrategySet, p: GameParams) -> Tuple[np.ndarray, np.ndarray]:
    """Base payoffs over joint states: pi1[i, j], pi2[i, j] for (S1[i], S2[j])."""
    m, n = len(S1), len(S2)
    pi1 = np.empty((m, n))
    pi2 = np.empty((m, n))
    for i, s1 in enumerate(S1):
        for j, s2 in enumerate(S2):
            pi1[i, j], pi2[i, j] = base_payoff(s1, s2, p)
    return pi1, pi2


def build_transition_matrix(
    S1: StrategySet, S2: StrategySet, p: GameParams, cfg: IntrospectionConfig
) -> np.ndarray:
    """Row-stochastic mn x mn transition matrix over joint states (i, j).

    Flat index is i*n + j. A player with a singleton set has no alternative
    to test; its 1/2 update mass stays on the diagonal.
    """
    m, n = len(S1), len(S2)
    pi1, pi2 = payoff_matrices(S1, S2, p)
    w = cfg.w
    M = np.zeros((m * n, m * n))
    for i in range(m):
        for j in range(n):
            row = i * n + j
            out = 0.0
            if m > 1:
                for k in range(m):
                    if k == i:
                        continue
                    q = fermi(pi1[k, j] - pi1[i, j], w) / (2.0 * (m - 1))
                    M[row, k * n + j] = q
                    out += q
            if n > 1:
                for l in range(n):
                    if l == j:
                        continue
                    q = fermi(pi2[i, l] - pi2[i, j], w) / (2.0 * (n - 1))
                    M[row, i * n + l] = q
                    out += q
            M[row, row] = 1.0 - out
    return M


def stationary_distribution(M: np.ndarray) -> np.ndarray:
    """Unique left fixed vector of a row-stochastic matrix, summing to 1.

    Solved directly via (M^T - I) v = 0 with one row replaced by the
    normalization constraint; power iteration is the fallback when the
    direct solve misses the residual tolerance.
    """
    k = M.shape[0]
    if k == 1:
        return np.ones(1)
    A = M.T - np.eye(k)
    A[-1, :] = 1.0
    b = np.zeros(k)
    b[-1] = 1.0
    try:
        v = np.linalg.solve(A, b)
    except np.linalg.LinAlgError:
        v = np.full(k, np.nan)
    if _residual(v, M) < STATIONARY_RESIDUAL_TOL and v.min() > -1e-12:
        v = np.clip(v, 0.0, None)
        return v / v.sum()
    # Fallback: power iteration from the uniform vector.
    v = np.full(k, 1.0 / k)
    for _ in range(1_000_000):
        nxt = v @ M
        nxt /= nxt.sum()
        if np.abs(nxt - v).max() < 1e-13:
            v = nxt
            break
        v = nxt
    if _residual(v, M) >= STATIONARY_RESIDUAL_TOL:
        raise StationarySolveError(
            f"stationary residual {_residual(v, M):.3e} exceeds {STATIONARY_RESIDUAL_TOL:.0e}"
        )
    return np.clip(v, 0.0, None) / np.clip(v, 0.0, None).sum()


def _residual(v: np.ndarray, M: np.ndarray) -> float:
    if not np.all(np.isfinite(v)):
        return math.inf
    return float(np.abs(v @ M - v).max())


def expected_payoffs(
    S1: StrategySet, S2: StrategySet, p: GameParams, cfg: IntrospectionConfig
) -> Tuple[float, float]:
    """Stationary expected payoffs (pi_12, pi_21) between two strategy sets."""
    pi1, pi2 = payoff_matrices(S1, S2, p)
    M = build_transition_matrix(S1, S2, p, cfg)
    v = stationary_distribution(M)
    return float(v @ pi1.ravel()), float(v @ pi2.ravel())


@njit(cache=True)
def _simulate_kernel(pi1, pi2, w, steps, state):
    m, n = pi1.shape
    u, state = next_unit(state)
    i = min(int(u * m), m - 1)
    u, state = next_unit(state)
    j = min(int(u * n), n - 1)
    acc1 = 0.0
    acc2 = 0.0
    for _ in range(steps):
        acc1 += pi1[i, j]
        acc2 += pi2[i, j]
        u, state = next_unit(state)
        if u < 0.5:
            if m > 1:
                u, state = next_unit(state)
                k = min(int(u * (m - 1)), m - 2)
                if k >= i:
                    k += 1
                z = w * (pi1[k, j] - pi1[i, j])
                if z >= 0.0:
                    prob = 1.0 / (1.0 + math.exp(-z))
                else:
                    e = math.exp(z)
                    prob = e / (1.0 + e)
                u, state = next_unit(state)
                if u < prob:
                    i = k
        else:
            if n > 1:
                u, state = next_unit(state)
                l = min(int(u * (n - 1)), n - 2)
                if l >= j:
                    l += 1
                z = w * (pi2[i, l] - pi2[i, j])
                if z >= 0.0:
                    prob = 1.0 / (1.0 + math.exp(-z))
                else:
                    e = math.exp(z)
                    prob = e / (1.0 + e)
                u, state = next_unit(state)
                if u < prob:
                    j = l
    return acc1 / steps, acc2 / steps


def simulate_introspection(
    S1: StrategySet,
    S2: StrategySet,
    p: GameParams,
    cfg: IntrospectionConfig,
    steps: int,
    seed: int,
) -> Tuple[float, float]:
    """Monte Carlo oracle: run the literal introspection process.

    Starts from a uniformly random joint state and returns the payoff pair
    time-averaged over all steps. Deterministic given the seed; independent
    of the transition-matrix pipeline.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    pi1, pi2 = payoff_matrices(S1, S2, p)
    a1, a2 = _simulate_kernel(pi1, pi2, float(cfg.w), int(steps), seed_to_state(seed))
    return float(a1), float(a2)
