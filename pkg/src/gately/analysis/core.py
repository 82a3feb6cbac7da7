"""Core membership, Core non-emptiness and alpha-top dominance."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..errors import NotSemiStandard, NotStandard
from ..game import Coalition, Game, coalition_sums, individual_worths, zero_normalise
from ..lp import INFEASIBLE, linprog_exact
from ..values import (
    FLOAT_TOL,
    Allocation,
    _float_weights,
    _integer_exponent,
    _check_positive,
    alpha_gately_value,
    as_allocation,
    is_efficient,
    net_marginals,
    surplus,
)


@dataclass(frozen=True)
class CoreCertificate:
    """Outcome of a Core check.

    ``violated_coalitions`` lists ``(S, v(S) - x(S))`` for every coalition
    whose worth is not covered.  An inefficient ``x`` is never a member even
    when no coalition is short-changed.
    """

    member: bool
    violated_coalitions: tuple[tuple[Coalition, object], ...]
    efficient: bool = True

    def __bool__(self):
        return self.member


def core_membership(g: Game, x) -> CoreCertificate:
    x = as_allocation(x)
    if len(x) != g.n:
        raise ValueError(f"allocation has {len(x)} entries for a {g.n}-player game")
    sums = coalition_sums(x, g.n)
    violated = []
    if x.exact:
        for s in range(1, 1 << g.n):
            deficit = g.worths[s] - sums[s]
            if deficit > 0:
                violated.append((s, deficit))
    else:
        for s in range(1, 1 << g.n):
            deficit = float(g.worths[s]) - sums[s]
            if deficit > FLOAT_TOL:
                violated.append((s, deficit))
    efficient = is_efficient(g, x)
    return CoreCertificate(efficient and not violated, tuple(violated), efficient)


@dataclass(frozen=True)
class CoreStatus:
    nonempty: bool
    witness: Allocation | None = None

    def __bool__(self):
        return self.nonempty


def core_nonempty(g: Game, batch: int | None = None) -> CoreStatus:
    """Decide exactly whether the Core is nonempty.

    Minimises ``x(N)`` over ``x(S) >= v(S)`` by constraint generation: only
    the currently violated coalitions are added to the exact LP, so the
    tableau stays small even at 16 players.  The Core is nonempty iff the
    minimum does not exceed ``v(N)``.
    """
    nu = individual_worths(g)
    w = zero_normalise(g).worths  # y = x - nu turns singletons into y >= 0
    extra = surplus(g)
    if extra < 0:
        return CoreStatus(False)
    batch = batch or 2 * g.n
    grand = g.grand
    active: list[Coalition] = []
    y = [Fraction(0)] * g.n
    opt = Fraction(0)
    while True:
        sums = coalition_sums(y, g.n)
        short = [(w[s] - sums[s], s) for s in range(1, grand) if w[s] > sums[s]]
        if not short:
            break
        short.sort(key=lambda t: (-t[0], t[1]))
        active.extend(s for _, s in short[:batch])
        A = [[-1 if s >> i & 1 else 0 for i in range(g.n)] for s in active]
        b = [-w[s] for s in active]
        res = linprog_exact([1] * g.n, A, b)
        if res.status == INFEASIBLE:  # pragma: no cover - y large enough is always feasible
            return CoreStatus(False)
        y, opt = res.x, res.objective
        if opt > extra:
            return CoreStatus(False)
    y = list(y)
    y[0] += extra - opt
    return CoreStatus(True, Allocation(tuple(v + d for v, d in zip(nu, y))))


class TopDominance(NamedTuple):
    holds: bool
    failing: Coalition | None


def alpha_top_dominance(g: Game, alpha) -> TopDominance:
    _check_positive("alpha", alpha)
    net = net_marginals(g)
    if any(b < 0 for b in net):
        raise NotSemiStandard("alpha-top dominance is defined for semi-standard games only")
    z = zero_normalise(g).worths
    extra = surplus(g)
    k = _integer_exponent(alpha)
    if k is not None:
        p = coalition_sums([b**k for b in net], g.n)
        total = p[g.grand]
        for s in range(1, 1 << g.n):
            if z[s] * total > extra * p[s]:
                return TopDominance(False, s)
        return TopDominance(True, None)
    if not any(net):
        # every power sum vanishes: both sides are 0
        return TopDominance(True, None)
    p = coalition_sums(_float_weights(net, float(alpha)), g.n)
    total = p[g.grand]
    fextra = float(extra)
    for s in range(1, 1 << g.n):
        if float(z[s]) > fextra * p[s] / total + FLOAT_TOL:
            return TopDominance(False, s)
    return TopDominance(True, None)


def check_maincore_iff(g: Game, alpha) -> bool:
    """True when alpha-top dominance and Core membership of g^alpha agree."""
    net = net_marginals(g)
    if any(b < 0 for b in net) or not any(b > 0 for b in net):
        raise NotStandard("the top-dominance characterisation needs a standard game")
    top = alpha_top_dominance(g, alpha).holds
    member = core_membership(g, alpha_gately_value(g, alpha)).member
    return top == member
