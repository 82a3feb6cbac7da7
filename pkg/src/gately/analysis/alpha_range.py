"""Range of alpha for which the alpha-Gately value lies in the Core."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import NotStandard
from ..game import Game, zero_normalise
from ..values import FLOAT_TOL, alpha_gately_value, net_marginals, surplus
from .core import core_membership

log = logging.getLogger(__name__)

ALPHA_MIN = 1e-3
ALPHA_MAX = 1e3


@dataclass(frozen=True)
class AlphaInterval:
    """A closed alpha interval; ``approx_*`` marks endpoints located by bisection."""

    lo: float
    hi: float
    approx_lo: bool = True
    approx_hi: bool = True
    closed_lo: bool = True
    closed_hi: bool = True

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, alpha) -> bool:
        above = alpha >= self.lo if self.closed_lo else alpha > self.lo
        below = alpha <= self.hi if self.closed_hi else alpha < self.hi
        return above and below


@dataclass(frozen=True)
class AlphaRange:
    intervals: tuple[AlphaInterval, ...]
    probe_grid: tuple[float, ...]

    def __contains__(self, alpha) -> bool:
        return any(alpha in iv for iv in self.intervals)

    @property
    def empty(self) -> bool:
        return not self.intervals


class _Slack:
    """``x(S) - v(S)`` at ``x = g^alpha(v)`` for every proper coalition, in floats."""

    def __init__(self, g: Game):
        net = net_marginals(g)
        if any(b < 0 for b in net) or not any(b > 0 for b in net):
            raise NotStandard("alpha-Gately values need a standard game")
        self.n = g.n
        self.net = np.array([float(b) for b in net])
        self.log_net = np.log(np.where(self.net > 0, self.net, 1.0))
        self.top = self.log_net[self.net > 0].max()
        self.extra = float(surplus(g))
        z = zero_normalise(g).worths
        self.coalitions = np.arange(1, g.grand, dtype=np.int64)
        self.z = np.array([float(z[s]) for s in self.coalitions])
        bits = (self.coalitions[:, None] >> np.arange(g.n)[None, :]) & 1
        self.member = bits.astype(float)

    def shares(self, alpha: float) -> np.ndarray:
        w = np.where(self.net > 0, np.exp(alpha * (self.log_net - self.top)), 0.0)
        return w / w.sum()

    def slack(self, alpha: float, rows=slice(None)) -> np.ndarray:
        return self.extra * (self.member[rows] @ self.shares(alpha)) - self.z[rows]


def _runs(ok: np.ndarray) -> list[tuple[int, int]]:
    out = []
    start = None
    for i, flag in enumerate(ok):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            out.append((start, i - 1))
            start = None
    if start is not None:
        out.append((start, len(ok) - 1))
    return out


def _intersect(a, b, tol):
    out = []
    for lo1, hi1 in a:
        for lo2, hi2 in b:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if lo <= hi:
                out.append((lo, hi))
            elif lo - hi <= tol:
                mid = 0.5 * (lo + hi)
                out.append((mid, mid))
    return out


def alpha_core_range(g: Game, grid: int = 601, refine_tol: float = 1e-6,
                     lo: float = ALPHA_MIN, hi: float = ALPHA_MAX) -> AlphaRange:
    """Locate the alpha values with ``g^alpha(v)`` in the Core.

    Every coalition constraint is probed on a log-spaced alpha grid; each
    sign change is bisected to width ``refine_tol`` and the per-coalition
    feasible sets are intersected.  Intervals narrower than ``refine_tol``
    collapse to a single point.  Endpoints within ``refine_tol`` of an
    integer are re-checked in exact arithmetic and snapped when the exact
    check passes.
    """
    if not 0 < lo < hi:
        raise ValueError("need 0 < lo < hi")
    sl = _Slack(g)
    probe = np.logspace(math.log10(lo), math.log10(hi), grid)
    probe[0], probe[-1] = lo, hi
    feasible = np.empty((grid, len(sl.coalitions)), dtype=bool)
    for k, a in enumerate(probe):
        feasible[k] = sl.slack(a) >= -FLOAT_TOL

    def root(row: int, a: float, b: float, ok_at_a: bool) -> float:
        while b - a > refine_tol:
            mid = math.sqrt(a * b)
            if mid <= a or mid >= b:
                break
            ok = sl.slack(mid, slice(row, row + 1))[0] >= -FLOAT_TOL
            if ok == ok_at_a:
                a = mid
            else:
                b = mid
        return 0.5 * (a + b)

    current = [(lo, hi)]
    for row in range(len(sl.coalitions)):
        col = feasible[:, row]
        if col.all():
            continue
        pieces = []
        for i, j in _runs(col):
            left = lo if i == 0 else root(row, probe[i - 1], probe[i], False)
            right = hi if j == grid - 1 else root(row, probe[j], probe[j + 1], True)
            pieces.append((left, right))
        current = _intersect(current, pieces, refine_tol)
        if not current:
            break

    intervals = []
    for a, b in sorted(set(current)):
        if b - a < refine_tol:
            a = b = 0.5 * (a + b)
        intervals.append(_finish(g, sl, a, b, lo, hi, refine_tol, probe))
    intervals = [iv for iv in intervals if iv is not None]
    return AlphaRange(tuple(intervals), tuple(float(p) for p in probe))


def _snap(g: Game, alpha: float, tol: float):
    k = round(alpha)
    if k >= 1 and abs(alpha - k) <= tol:
        if core_membership(g, alpha_gately_value(g, k)).member:
            return float(k)
    return None


def _finish(g, sl, a, b, lo, hi, tol, probe):
    approx_lo = a != lo
    approx_hi = b != hi
    if approx_lo:
        snapped = _snap(g, a, tol)
        if snapped is not None:
            a, approx_lo = snapped, False
    if approx_hi:
        snapped = _snap(g, b, tol)
        if snapped is not None:
            b, approx_hi = snapped, False
    if a < b:
        inner = [p for p in probe if a < p < b] or [math.sqrt(a * b)]
        bad = [p for p in inner if (sl.slack(p) < -FLOAT_TOL).any()]
        if bad:
            log.warning("dropping alpha interval [%g, %g]: not in the Core at alpha=%g", a, b, bad[0])
            return None
    return AlphaInterval(a, b, approx_lo, approx_hi)
