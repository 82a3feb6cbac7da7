"""Grid-refinement oracles over the imputation simplex.

These search the imputation set directly, without using the closed form of
the alpha-Gately value, and are only meant for cross-checking it at small n.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from ..errors import BetaZeroDegenerate, NotRegular
from ..game import Game, classify, individual_worths
from ..values import Allocation, _check_positive, net_marginals, surplus

ORACLE_MAX_N = 6
SHRINK = 0.25
MIN_ROUNDS = 12
# half-width of the local grid in steps, per player count
_GRID_HALF = {2: 32, 3: 12, 4: 8, 5: 5, 6: 4}


def _refine(objective, n: int, rounds: int) -> np.ndarray:
    """Minimise ``objective`` over the unit simplex by nested grids.

    The simplex is parametrised by its first n-1 coordinates.  Each round
    lays a (2K+1)^(n-1) grid around the incumbent and then shrinks the step
    by ``SHRINK``; the incumbent is always on the next grid, so the best
    value never gets worse.
    """
    K = _GRID_HALF[n]
    offsets = np.array(list(itertools.product(range(-K, K + 1), repeat=n - 1)), dtype=float)
    centre = np.full(n - 1, 1.0 / n)
    step = 1.0 / K
    best = np.append(centre, 1.0 - centre.sum())
    best_val = math.inf
    for _ in range(rounds):
        head = centre + step * offsets
        lam = np.column_stack([head, 1.0 - head.sum(axis=1)])
        lam = lam[(lam >= 0.0).all(axis=1)]
        vals = objective(lam)
        k = int(np.argmin(vals))
        if vals[k] <= best_val:
            best_val = vals[k]
            best = lam[k]
        centre = best[:-1]
        step *= SHRINK
    return best


def _setup(g: Game):
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"grid oracles are limited to {ORACLE_MAX_N} players, got {g.n}")
    if not classify(g).regular:
        raise NotRegular("grid oracles need a regular game")
    nu = np.array([float(v) for v in individual_worths(g)])
    net = np.array([float(b) for b in net_marginals(g)])
    return nu, net, float(surplus(g))


def _rho(net: np.ndarray, gain: np.ndarray, beta: float) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        r = net / gain**beta
    # players with M_i = v_i never disrupt; x_i = v_i with M_i > v_i is +inf
    r = np.where(net == 0.0, 0.0, r)
    return np.where((gain <= 0.0) & (net > 0.0), np.inf, r)


def minimax_oracle(g: Game, beta, rounds: int = 24) -> Allocation:
    """Numerical ``argmin_x max_j rho^beta_j(x)`` over the imputation set."""
    _check_positive("beta", beta)
    nu, net, extra = _setup(g)
    if extra == 0.0:
        return Allocation(tuple(nu), exact=False)
    beta = float(beta)

    def objective(lam):
        return _rho(net, extra * lam, beta).max(axis=1)

    lam = _refine(objective, g.n, max(rounds, MIN_ROUNDS))
    return Allocation(tuple(nu + extra * lam), exact=False)


def aggregate_min_oracle(g: Game, alpha, rounds: int = 24) -> Allocation:
    """Numerical ``argmin_x sum_j rho^beta_j(x)`` with ``beta = (1 - alpha) / alpha``."""
    _check_positive("alpha", alpha)
    if alpha == 1:
        raise BetaZeroDegenerate(
            "alpha = 1 gives beta = 0: the aggregate propensity is constant on the imputation set"
        )
    if alpha > 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha!r}")
    nu, net, extra = _setup(g)
    if extra == 0.0:
        return Allocation(tuple(nu), exact=False)
    beta = (1.0 - float(alpha)) / float(alpha)

    def objective(lam):
        return _rho(net, extra * lam, beta).sum(axis=1)

    lam = _refine(objective, g.n, max(rounds, MIN_ROUNDS))
    return Allocation(tuple(nu + extra * lam), exact=False)
