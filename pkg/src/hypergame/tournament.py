"""Round-robin payoff tables and combined-score rankings over strategy sets.

Every ordered pair of strategy sets gets one exact stationary payoff; a
set's combined score is its row sum (all opponents including itself).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .game import GameParams, StrategySet
from .markov import IntrospectionConfig, StationarySolveError, expected_payoffs

TIE_TOL = 1e-9


@dataclass(frozen=True)
class PayoffTable:
    """Square matrix of stationary payoffs: entry [i, j] is set i against set j."""

    sets: Tuple[StrategySet, ...]
    matrix: np.ndarray
    params: GameParams
    cfg: IntrospectionConfig

    def entry(self, row: StrategySet, col: StrategySet) -> float:
        return float(self.matrix[self.sets.index(row), self.sets.index(col)])


@dataclass(frozen=True)
class TournamentReport:
    """Pairwise winners, combined scores, and the resulting ranking."""

    sets: Tuple[StrategySet, ...]
    pairwise_winners: Tuple[Tuple[StrategySet, StrategySet, Optional[StrategySet]], ...]
    combined_scores: np.ndarray
    ranking: Tuple[StrategySet, ...]
    tied_ranks: bool = False

    @property
    def winner(self) -> StrategySet:
        return self.ranking[0]


def build_payoff_table(
    sets: Sequence[StrategySet], p: GameParams, cfg: IntrospectionConfig
) -> PayoffTable:
    """Fill the full table via exact stationary solves, one per unordered pair."""
    sets = tuple(sets)
    if not sets:
        raise ValueError("need at least one strategy set")
    if len(set(sets)) != len(sets):
        raise ValueError("strategy sets must be distinct")
    k = len(sets)
    mat = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            try:
                pij, pji = expected_payoffs(sets[i], sets[j], p, cfg)
            except StationarySolveError as exc:
                raise StationarySolveError(
                    f"stationary solve failed for pair {sets[i]}:{sets[j]}: {exc}"
                ) from exc
            mat[i, j] = pij
            mat[j, i] = pji
    return PayoffTable(sets=sets, matrix=mat, params=p, cfg=cfg)


def tournament_report(table: PayoffTable) -> TournamentReport:
    """Derive pairwise winners and the combined-score ranking from a table."""
    sets = table.sets
    mat = table.matrix
    winners: List[Tuple[StrategySet, StrategySet, Optional[StrategySet]]] = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            diff = mat[i, j] - mat[j, i]
            if abs(diff) < TIE_TOL:
                winners.append((sets[i], sets[j], None))
            else:
                winners.append((sets[i], sets[j], sets[i] if diff > 0 else sets[j]))
    scores = mat.sum(axis=1)
    order = sorted(range(len(sets)), key=lambda i: (-scores[i], i))
    tied = any(
        abs(scores[order[k]] - scores[order[k + 1]]) < TIE_TOL for k in range(len(order) - 1)
    )
    return TournamentReport(
        sets=sets,
        pairwise_winners=tuple(winners),
        combined_scores=scores,
        ranking=tuple(sets[i] for i in order),
        tied_ranks=tied,
    )
