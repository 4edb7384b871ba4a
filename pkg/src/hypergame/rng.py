"""Minimal splitmix64 generator shared by the jitted simulation kernels.

A hand-rolled counter-based generator keeps replicate streams independent
and bit-identical across platforms; the algorithm id ("splitmix64") is
recorded in run manifests.
"""

from __future__ import annotations

import numpy as np
from numba import njit

RNG_ALGORITHM = "splitmix64"

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U53_INV = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, inline="always")
def next_u64(state: np.uint64):
    """Advance the splitmix64 state; returns (output, new_state)."""
    state = state + _GAMMA
    z = state
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    return z, state


@njit(cache=True, inline="always")
def next_unit(state: np.uint64):
    """Uniform double in [0, 1) and the new state."""
    z, state = next_u64(state)
    return (z >> np.uint64(11)) * _U53_INV, state


def seed_to_state(seed: int) -> np.uint64:
    """Map an arbitrary nonnegative integer seed to an initial state."""
    return np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
