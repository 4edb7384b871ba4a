"""Strategies, strategy sets, and the one-shot voluntary prisoner's dilemma.

The base game has three strategies: cooperate (C), defect (D), and opt out
as a loner (L). Whenever either participant plays L the interaction is void
and both receive the fixed loner payoff delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Tuple


class Strategy(IntEnum):
    """The three base strategies, with fixed canonical order C < D < L."""

    C = 0
    D = 1
    L = 2

    def __str__(self) -> str:
        return self.name


def _parse_strategy(ch: str) -> Strategy:
    try:
        return Strategy[ch]
    except KeyError:
        raise ValueError(f"unknown strategy character {ch!r} (expected C, D or L)")


@dataclass(frozen=True)
class GameParams:
    """Payoff parameters (b, c, delta) of the voluntary prisoner's dilemma.

    The interesting regime is c > 0, b > c and 0 < delta < b - c; set
    ``allow_extreme=True`` to bypass the delta check for exploratory sweeps.
    """

    b: float
    c: float = 1.0
    delta: float = 0.25
    allow_extreme: bool = False

    def __post_init__(self) -> None:
        if not (self.c > 0):
            raise ValueError(f"cost c must be positive, got {self.c}")
        if not (self.b > self.c):
            raise ValueError(f"benefit b={self.b} must exceed cost c={self.c}")
        if not self.allow_extreme and not (0 < self.delta < self.b - self.c):
            raise ValueError(
                f"loner payoff delta={self.delta} must lie in (0, b-c)="
                f"(0, {self.b - self.c}); pass allow_extreme=True to override"
            )


@dataclass(frozen=True)
class StrategySet:
    """A nonempty subset of {C, D, L} in canonical order.

    Equal sets compare equal regardless of construction order. The short
    string form ("CL", "CDL", ...) is used in CSV headers and CLI flags.
    """

    members: Tuple[Strategy, ...]

    def __init__(self, members: Iterable[Strategy | str]):
        parsed = []
        for m in members:
            parsed.append(m if isinstance(m, Strategy) else _parse_strategy(m))
        canon = tuple(sorted(set(parsed)))
        if not canon:
            raise ValueError("strategy set must be nonempty")
        object.__setattr__(self, "members", canon)

    @classmethod
    def from_string(cls, text: str) -> "StrategySet":
        return cls(text)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def name(self) -> str:
        return "".join(s.name for s in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> Strategy:
        return self.members[i]

    def __str__(self) -> str:
        return self.name


def base_payoff(s1: Strategy, s2: Strategy, p: GameParams) -> Tuple[float, float]:
    """One-shot payoff pair for (s1, s2).

    (C,C) -> (b-c, b-c); (C,D) -> (-c, b); (D,D) -> (0, 0);
    any pairing involving L voids the game and pays (delta, delta).
    """
    if s1 is Strategy.L or s2 is Strategy.L:
        return (p.delta, p.delta)
    if s1 is Strategy.C and s2 is Strategy.C:
        return (p.b - p.c, p.b - p.c)
    if s1 is Strategy.C:
        return (-p.c, p.b)
    if s2 is Strategy.C:
        return (p.b, -p.c)
    return (0.0, 0.0)


PAIR_SETS = (StrategySet("CD"), StrategySet("CL"), StrategySet("DL"))
ALL_SETS = (
    StrategySet("C"),
    StrategySet("D"),
    StrategySet("L"),
    StrategySet("CD"),
    StrategySet("CL"),
    StrategySet("DL"),
    StrategySet("CDL"),
)


def enumerate_strategy_sets(mode: str) -> Tuple[StrategySet, ...]:
    """Canonical set lists: 'pairs' -> the three 2-sets, 'all' -> all seven."""
    if mode == "pairs":
        return PAIR_SETS
    if mode == "all":
        return ALL_SETS
    raise ValueError(f"mode must be 'pairs' or 'all', got {mode!r}")
