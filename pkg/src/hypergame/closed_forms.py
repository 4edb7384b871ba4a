"""Closed-form stationary distributions and critical introspection strengths.

Analytic expressions for the three small chains that drive the phase
behavior: {C,L} self-play, {C,L} against {D}, and {C,L} against {D,L}.
These double as independent cross-checks of the generic Markov solver.
"""

from __future__ import annotations

import math
from typing import Callable, Tuple

import numpy as np

from .game import GameParams
from .markov import IntrospectionConfig


def cl_self_stationary(p: GameParams, cfg: IntrospectionConfig) -> np.ndarray:
    """Stationary distribution (v_CC, v_CL, v_LC, v_LL) for {C,L} self-play."""
    x = cfg.w * (p.b - p.c - p.delta)
    e1 = math.exp(x)
    e2 = math.exp(2 * x)
    den = 3 * e2 + 10 * e1 + 3
    v_cc = (3 * e2 + e1) / den
    v_rest = (3 * e1 + 1) / den
    return np.array([v_cc, v_rest, v_rest, v_rest])


def cl_self_payoff(p: GameParams, cfg: IntrospectionConfig) -> float:
    """Expected payoff of a {C,L} player against another: v_CC*(b-c-delta)+delta."""
    v_cc = cl_self_stationary(p, cfg)[0]
    return v_cc * (p.b - p.c - p.delta) + p.delta


def d_vs_cl_stationary(p: GameParams, cfg: IntrospectionConfig) -> np.ndarray:
    """Stationary distribution (v_CD, v_LD) of the 2-state {C,L}-vs-{D} chain."""
    a = cfg.w * (p.c + p.delta)
    den = math.exp(-a) + math.exp(a) + 2
    v_cd = (math.exp(-a) + 1) / den
    return np.array([v_cd, 1.0 - v_cd])


def d_vs_cl_payoff(p: GameParams, cfg: IntrospectionConfig) -> float:
    """Expected payoff of a {D} player against a {C,L} player."""
    v_cd, v_ld = d_vs_cl_stationary(p, cfg)
    return v_cd * p.b + v_ld * p.delta


def dl_vs_cl_stationary(p: GameParams, cfg: IntrospectionConfig) -> np.ndarray:
    """Stationary distribution over states (C,D), (C,L), (L,D), (L,L).

    Player 1 draws from {C,L}, player 2 from {D,L}.
    """
    w = cfg.w
    ea = math.exp(w * (-p.c - p.delta))
    eb = math.exp(w * (p.b - p.delta))
    ec = math.exp(w * (p.b - p.c - 2 * p.delta))
    den = 10 * ea + 10 * eb + 6 * ec + 6
    return np.array(
        [
            (ea + eb + 6 * ec) / den,
            (5 * ea + eb + 2) / den,
            (ea + 5 * eb + 2) / den,
            (3 * ea + 3 * eb + 2) / den,
        ]
    )


def dl_vs_cl_payoffs(p: GameParams, cfg: IntrospectionConfig) -> Tuple[float, float]:
    """Expected payoffs (cooperator side {C,L}, defector side {D,L}).

    Only state (C,D) is a live game: the {C,L} player earns -c and the
    {D,L} player earns b; every other state pays delta to both.
    """
    v = dl_vs_cl_stationary(p, cfg)
    v_cd = v[0]
    cl_side = v_cd * (-p.c) + (1.0 - v_cd) * p.delta
    dl_side = v_cd * p.b + (1.0 - v_cd) * p.delta
    return cl_side, dl_side


def _bisect(f: Callable[[float], float], lo: float, hi: float, tol: float, iters: int = 200) -> float:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0 or hi - lo < tol:
            return mid
        if flo * fm < 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def _bracketed_root(f: Callable[[float], float], tol: float) -> float:
    """Find a sign change of f over w in (0, 1e3] and bisect it."""
    lo = 1e-6
    flo = f(lo)
    grid = np.geomspace(1e-4, 1e3, 400)
    for hi in grid:
        fhi = f(hi)
        if flo * fhi <= 0:
            return _bisect(f, lo, float(hi), tol)
        lo, flo = float(hi), fhi
    raise ValueError("no sign change bracketed for w in (0, 1e3]")


def critical_w_vs_d(p: GameParams) -> Tuple[float, float]:
    """Threshold w above which {C,L} self-play beats a {D} opponent.

    Returns (w_transcendental, w_bisection). Writing x = w*(b-c-delta),
    alpha = (c+delta)/(b-c-delta) and beta = c/(b-c-delta), the equality
    v_CC*(b-c-delta) = v_CD*(b-delta) reduces to

        e^{(1+alpha)x} - beta*e^x - 3*(1+beta) = 0,

    whose unique positive root x* gives w = x*/(b-c-delta). The second
    return value is the direct sign-change bisection of the payoff gap;
    the two methods must agree.
    """
    gap = p.b - p.c - p.delta
    if gap <= 0:
        raise ValueError("requires b - c - delta > 0")
    alpha = (p.c + p.delta) / gap
    beta = p.c / gap

    def trans(x: float) -> float:
        return math.exp((1 + alpha) * x) - beta * math.exp(x) - 3 * (1 + beta)

    x_star = _bisect(trans, 1e-9, 50.0, 1e-12)
    w_trans = x_star / gap

    def payoff_gap(w: float) -> float:
        cfg = IntrospectionConfig(w)
        return cl_self_payoff(p, cfg) - d_vs_cl_payoff(p, cfg)

    w_direct = _bracketed_root(payoff_gap, 1e-10)
    return w_trans, w_direct


def critical_w_vs_dl(p: GameParams) -> float:
    """Threshold w above which {C,L} self-play beats a {D,L} opponent."""
    if p.b - p.c - p.delta <= 0:
        raise ValueError("requires b - c - delta > 0")

    def payoff_gap(w: float) -> float:
        cfg = IntrospectionConfig(w)
        return cl_self_payoff(p, cfg) - dl_vs_cl_payoffs(p, cfg)[1]

    return _bracketed_root(payoff_gap, 1e-8)
