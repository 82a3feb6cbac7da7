"""Value maps (Gately, alpha-Gately, dual, Shapley, ...) and propensities to disrupt.

Everything with a rational game and an integer exponent is computed exactly
with :class:`fractions.Fraction`.  Non-integer exponents switch to binary
floating point; such results carry ``exact=False``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Sequence

from .errors import NonImputation, NotSemiStandard, NotStandard, BadCoalition
from .game import (
    Coalition,
    Game,
    harsanyi_dividends,
    individual_worths,
    marginal_contributions,
    size,
    dual_game,
)

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Allocation:
    """A payoff vector; ``exact`` tells whether the entries are Fractions."""

    payoffs: tuple
    exact: bool = True

    def __post_init__(self):
        if self.exact:
            object.__setattr__(self, "payoffs", tuple(Fraction(p) for p in self.payoffs))
        else:
            object.__setattr__(self, "payoffs", tuple(float(p) for p in self.payoffs))

    def __iter__(self):
        return iter(self.payoffs)

    def __len__(self):
        return len(self.payoffs)

    def __getitem__(self, i):
        return self.payoffs[i]

    def total(self):
        return sum(self.payoffs)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(p) for p in self.payoffs)


# An imputation is an Allocation that also passes is_imputation().
Imputation = Allocation


def as_allocation(x) -> Allocation:
    if isinstance(x, Allocation):
        return x
    x = tuple(x)
    exact = all(isinstance(p, (int, Fraction)) for p in x)
    return Allocation(x, exact=exact)


def efficiency_tolerance(g: Game) -> float:
    return FLOAT_TOL * max(1.0, abs(float(g.worths[g.grand])))


def is_efficient(g: Game, x) -> bool:
    x = as_allocation(x)
    top = g.worths[g.grand]
    if x.exact:
        return x.total() == top
    return abs(x.total() - float(top)) <= efficiency_tolerance(g)


def is_individually_rational(g: Game, x) -> bool:
    x = as_allocation(x)
    nu = individual_worths(g)
    if x.exact:
        return all(a >= b for a, b in zip(x, nu))
    return all(a >= float(b) - FLOAT_TOL for a, b in zip(x, nu))


def is_imputation(g: Game, x) -> bool:
    x = as_allocation(x)
    if len(x) != g.n:
        return False
    return is_efficient(g, x) and is_individually_rational(g, x)


class _Indeterminate:
    """Marker for a 0/0 propensity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Indeterminate"

    def __reduce__(self):
        return (_Indeterminate, ())


INDETERMINATE = _Indeterminate()
INF = math.inf


def _ratio(num, den):
    if den == 0:
        if num == 0:
            return INDETERMINATE
        return INF if num > 0 else -INF
    return num / den


@dataclass(frozen=True)
class PropensityProfile:
    """Per-player propensities; ``beta`` is None for Gately's original ``d_i``."""

    values: tuple
    beta: object = None

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def propensity_coalition(g: Game, x, s: Coalition):
    if s == 0 or s == g.grand:
        raise BadCoalition("propensity to disrupt needs a coalition other than the empty set and N")
    x = as_allocation(x)
    rest = g.grand ^ s
    inside = sum(x[i] for i in range(g.n) if s >> i & 1)
    outside = sum(x[i] for i in range(g.n) if rest >> i & 1)
    vs, vr = g.worths[s], g.worths[rest]
    if not x.exact:
        vs, vr = float(vs), float(vr)
    return _ratio(outside - vr, inside - vs)


def propensity_player(g: Game, x, i: int):
    if not 0 <= i < g.n:
        raise IndexError(f"player {i} out of range for {g.n} players")
    x = as_allocation(x)
    m = marginal_contributions(g)[i]
    vi = g.worths[1 << i]
    if not x.exact:
        m, vi = float(m), float(vi)
    return _ratio(m - x[i], x[i] - vi)


def _integer_exponent(beta, allow_float: bool = False):
    """Return ``beta`` as a positive int if it is one, else None.

    Floats select float arithmetic even when integral, unless ``allow_float``.
    """
    if isinstance(beta, bool):
        return None
    if isinstance(beta, int):
        return beta if beta > 0 else None
    if isinstance(beta, Fraction):
        return int(beta) if beta.denominator == 1 and beta > 0 else None
    if allow_float and isinstance(beta, float) and beta.is_integer() and beta > 0:
        return int(beta)
    return None


def _check_positive(name, value):
    if not isinstance(value, Real) or isinstance(value, bool) or not value > 0:
        raise ValueError(f"{name} must be a positive real, got {value!r}")
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


def generalized_propensity(g: Game, x, i: int, beta):
    _check_positive("beta", beta)
    x = as_allocation(x)
    if not is_imputation(g, x):
        raise NonImputation(f"{tuple(x)} is not an imputation")
    num = marginal_contributions(g)[i] - g.worths[1 << i]
    if num == 0:
        return Fraction(0) if x.exact else 0.0
    base = x[i] - g.worths[1 << i] if x.exact else x[i] - float(g.worths[1 << i])
    if base <= 0:
        # float-mode imputations may sit a hair below v_i
        return INF if num > 0 else -INF
    k = _integer_exponent(beta)
    if x.exact and k is not None:
        return num / base**k
    return float(num) / float(base) ** float(beta)


def propensity_profile(g: Game, x, beta=None) -> PropensityProfile:
    if beta is None:
        return PropensityProfile(tuple(propensity_player(g, x, i) for i in range(g.n)))
    return PropensityProfile(tuple(generalized_propensity(g, x, i, beta) for i in range(g.n)), beta)


def net_marginals(g: Game) -> tuple[Fraction, ...]:
    """``M_i(v) - v_i`` for every player."""
    return tuple(m - v for m, v in zip(marginal_contributions(g), individual_worths(g)))


def surplus(g: Game) -> Fraction:
    return g.worths[g.grand] - sum(individual_worths(g))


def _require_standard(net: Sequence[Fraction]) -> None:
    if any(b < 0 for b in net):
        raise NotSemiStandard("some player has v_i > M_i(v)")
    if not any(b > 0 for b in net):
        raise NotStandard("no player has v_i < M_i(v)")


def gately_value(g: Game) -> Allocation:
    """Closed-form Gately point.

    Defined whenever the net marginal contributions sum to a positive
    number; the result is an imputation on regular games.  A semi-regular
    game with ``M_i(v) = v_i`` for every player has the single imputation ``nu``,
    which is then its Gately point.
    """
    nu = individual_worths(g)
    net = net_marginals(g)
    den = sum(net)
    if not any(net) and surplus(g) == 0:
        return Allocation(nu)
    if den <= 0:
        raise NotStandard(
            "net marginal contributions sum to a non-positive number; "
            "the Gately point is not unique or does not exist"
        )
    extra = surplus(g)
    return Allocation(tuple(v + b / den * extra for v, b in zip(nu, net)))


def compromise_coefficient(g: Game) -> Fraction:
    den = sum(net_marginals(g))
    if den <= 0:
        raise NotStandard("net marginal contributions sum to a non-positive number")
    return surplus(g) / den


def _float_weights(net: Sequence[Fraction], alpha: float) -> list[float]:
    # scale by the largest base so that b^alpha cannot overflow for large alpha
    top = max(net)
    log_top = math.log(top)
    return [0.0 if b == 0 else math.exp(alpha * (math.log(b) - log_top)) for b in net]


def alpha_gately_value(g: Game, alpha) -> Allocation:
    _check_positive("alpha", alpha)
    net = net_marginals(g)
    _require_standard(net)
    nu = individual_worths(g)
    extra = surplus(g)
    k = _integer_exponent(alpha)
    if k is not None:
        w = [b**k for b in net]
        den = sum(w)
        return Allocation(tuple(v + wi / den * extra for v, wi in zip(nu, w)))
    w = _float_weights(net, float(alpha))
    den = math.fsum(w)
    return Allocation(tuple(float(v) + wi / den * float(extra) for v, wi in zip(nu, w)), exact=False)


def alpha_limit_value(g: Game, which: str) -> Allocation:
    """Limit of the alpha-Gately value as alpha goes to 0 (``"zero"``) or infinity."""
    net = net_marginals(g)
    _require_standard(net)
    if which == "zero":
        support = [b > 0 for b in net]
    elif which in ("infinity", "inf"):
        best = max(net)
        support = [b == best for b in net]
    else:
        raise ValueError(f"which must be 'zero' or 'infinity', got {which!r}")
    share = surplus(g) / sum(support)
    nu = individual_worths(g)
    return Allocation(tuple(v + share if on else v for v, on in zip(nu, support)))


def dual_alpha_gately_closed_form(g: Game, alpha: int) -> Allocation:
    k = _integer_exponent(alpha, allow_float=True)
    if k is None:
        raise ValueError(f"the dual alpha-Gately value needs a natural number alpha, got {alpha!r}")
    net = net_marginals(g)
    _require_standard(net)
    m = marginal_contributions(g)
    w = [b**k for b in net]
    den = sum(w)
    excess = sum(m) - g.worths[g.grand]
    return Allocation(tuple(mi - wi / den * excess for mi, wi in zip(m, w)))


def dual_alpha_gately(g: Game, alpha: int) -> Allocation:
    """alpha-Gately value of the dual game, for natural ``alpha``.

    The dual of a standard game has non-positive net marginals, so the
    formula is applied with integer powers of negative bases.  The result is
    cross-checked against the closed form in terms of ``g`` itself.
    """
    closed = dual_alpha_gately_closed_form(g, alpha)
    k = _integer_exponent(alpha, allow_float=True)
    d = dual_game(g)
    net = net_marginals(d)
    w = [b**k for b in net]
    den = sum(w)
    if den == 0:
        raise NotStandard("the dual game has a vanishing power sum of net marginals")
    nu = individual_worths(d)
    extra = surplus(d)
    via_dual = Allocation(tuple(v + wi / den * extra for v, wi in zip(nu, w)))
    if via_dual.payoffs != closed.payoffs:
        raise ArithmeticError("dual alpha-Gately: dual-game route and closed form disagree")
    return via_dual


def shapley_value(g: Game) -> Allocation:
    phi = [Fraction(0)] * g.n
    for s, d in harsanyi_dividends(g).entries.items():
        share = d / size(s)
        for i in range(g.n):
            if s >> i & 1:
                phi[i] += share
    return Allocation(tuple(phi))


def equal_division(g: Game) -> Allocation:
    share = g.worths[g.grand] / g.n
    return Allocation((share,) * g.n)
