"""Evolutionary hypergame dynamics for the voluntary prisoner's dilemma."""

__version__ = "0.1.0"

from .game import GameParams, Strategy, StrategySet, base_payoff, enumerate_strategy_sets
from .markov import (
    IntrospectionConfig,
    build_transition_matrix,
    expected_payoffs,
    fermi,
    simulate_introspection,
    stationary_distribution,
)
from .tournament import PayoffTable, TournamentReport, build_payoff_table, tournament_report

__all__ = [
    "GameParams",
    "Strategy",
    "StrategySet",
    "base_payoff",
    "enumerate_strategy_sets",
    "IntrospectionConfig",
    "fermi",
    "build_transition_matrix",
    "stationary_distribution",
    "expected_payoffs",
    "simulate_introspection",
    "PayoffTable",
    "TournamentReport",
    "build_payoff_table",
    "tournament_report",
]
