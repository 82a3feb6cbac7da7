"""Nucleolus over the imputation set by iterated exact linear programs."""
from __future__ import annotations

from fractions import Fraction

from ..errors import EmptyImputationSet
from ..game import Coalition, Game, individual_worths, zero_normalise
from ..lp import OPTIMAL, linprog_exact
from ..values import Allocation, surplus

NUCLEOLUS_MAX_N = 8


class _Span:
    """Incrementally row-reduced set of 0/1 coalition vectors."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        vec = list(vec)
        for col, row in self.rows:
            f = vec[col]
            if f:
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec) -> None:
        vec = self._reduce(vec)
        col = next((i for i, a in enumerate(vec) if a), None)
        if col is None:
            return
        p = vec[col]
        vec = [a / p for a in vec]
        self.rows = [(c, [a - r[col] * b for a, b in zip(r, vec)]) for c, r in self.rows]
        self.rows.append((col, vec))

    @property
    def rank(self) -> int:
        return len(self.rows)


def _indicator(s: Coalition, n: int) -> list[Fraction]:
    return [Fraction(s >> i & 1) for i in range(n)]


def nucleolus(g: Game) -> Allocation:
    """Lexicographic minimiser of the sorted excess vector over imputations.

    Each stage minimises the largest free excess; coalitions whose
    constraint carries a nonzero dual multiplier are tight in every optimum
    and get frozen at that level.  Coalitions whose excess is already pinned
    down by the frozen ones are dropped.
    """
    n = g.n
    if n > NUCLEOLUS_MAX_N:
        raise ValueError(f"nucleolus is limited to {NUCLEOLUS_MAX_N} players, got {n}")
    extra = surplus(g)
    if extra < 0:
        raise EmptyImputationSet("v(N) is below the sum of individual worths")
    z = zero_normalise(g).worths
    nu = individual_worths(g)
    grand = g.grand

    span = _Span(n)
    span.add(_indicator(grand, n))
    free = [s for s in range(1, grand)]
    fixed: list[tuple[Coalition, Fraction]] = []
    y = None
    # variables: y_0..y_{n-1} (x - nu >= 0), eps_plus, eps_minus
    while free:
        A_ub, b_ub = [], []
        for s in free:
            # z(S) - y(S) <= eps
            A_ub.append([-(s >> i & 1) for i in range(n)] + [-1, 1])
            b_ub.append(-z[s])
        A_eq = [[1] * n + [0, 0]]
        b_eq = [extra]
        for s, level in fixed:
            A_eq.append([s >> i & 1 for i in range(n)] + [0, 0])
            b_eq.append(z[s] - level)
        res = linprog_exact([0] * n + [1, -1], A_ub, b_ub, A_eq, b_eq)
        if res.status != OPTIMAL:  # pragma: no cover - the stage LP is always feasible and bounded
            raise RuntimeError(f"nucleolus stage LP ended with status {res.status}")
        eps = res.objective
        y = res.x[:n]
        tight = {s for s, d in zip(free, res.duals_ub) if d != 0}
        if not tight:  # pragma: no cover - the eps column forces some dual mass onto free rows
            raise RuntimeError("nucleolus stage produced no tight coalition")
        for s in sorted(tight):
            fixed.append((s, eps))
            span.add(_indicator(s, n))
        free = [s for s in free if s not in tight and not span.contains(_indicator(s, n))]
    if y is None:  # pragma: no cover - n >= 2 always leaves free coalitions
        y = [Fraction(0)] * n
    return Allocation(tuple(v + d for v, d in zip(nu, y)))
