"""Structural checks: k-games, Gately = Shapley, and the three-player Core results."""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ..errors import NotStandard, NotTwoGame, WrongPlayerCount
from ..game import (
    Coalition,
    DividendDecomposition,
    Game,
    classify,
    from_dividends,
    harsanyi_dividends,
    size,
)
from ..values import gately_value, net_marginals, shapley_value
from .core import alpha_top_dominance, core_membership, core_nonempty

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThreePlayerCoreReport:
    semi_regular: bool
    core_nonempty: bool
    gately_in_core: bool | None  # None when the Gately point is undefined

    @property
    def holds(self) -> bool:
        """Both implications: semi-regular => Gately in a nonempty Core, and
        nonempty Core => semi-regular."""
        part_a = not self.semi_regular or (self.core_nonempty and self.gately_in_core is True)
        part_b = not self.core_nonempty or self.semi_regular
        return part_a and part_b


def three_player_core_check(g: Game) -> ThreePlayerCoreReport:
    if g.n != 3:
        raise WrongPlayerCount(f"this check is for 3-player games, got {g.n}")
    semi_regular = classify(g).semi_regular
    nonempty = core_nonempty(g).nonempty
    try:
        in_core = core_membership(g, gately_value(g)).member
    except NotStandard:
        in_core = None
    return ThreePlayerCoreReport(semi_regular, nonempty, in_core)


@dataclass(frozen=True)
class KGameStructure:
    is_k_game: bool
    k: int | None
    carrier: tuple[Coalition, ...]


def kgame_structure(g: Game) -> KGameStructure:
    dividends = harsanyi_dividends(g)
    carrier = dividends.carrier
    sizes = {size(s) for s in carrier}
    k = sizes.pop() if len(sizes) == 1 else None
    is_k = k is not None and 2 <= k <= g.n - 1 and classify(g).regular
    return KGameStructure(is_k, k, carrier)


def _require_standard(g: Game) -> None:
    net = net_marginals(g)
    if any(b < 0 for b in net) or not any(b > 0 for b in net):
        raise NotStandard("this check needs a standard game")


def check_gately_equals_shapley(g: Game) -> bool:
    _require_standard(g)
    return gately_value(g).payoffs == shapley_value(g).payoffs


def balanced_externalities_check(g: Game) -> bool:
    """Check ``g_i(v) = sum_{j != i} (g_j(v) - g_j(v^{-i}))`` for every player.

    ``v^{-i}`` keeps only the dividends of coalitions without ``i``.  Players
    whose ``v^{-i}`` is not standard are skipped and logged.
    """
    st = kgame_structure(g)
    if not st.is_k_game or st.k != 2:
        raise NotTwoGame("balanced externalities are stated for 2-games")
    dividends = harsanyi_dividends(g)
    full = gately_value(g)
    for i in range(g.n):
        bit = 1 << i
        reduced = from_dividends(
            DividendDecomposition(g.n, {s: d for s, d in dividends.entries.items() if not s & bit})
        )
        if not classify(reduced).standard:
            log.info("balanced externalities: skipping player %d, v^-%d is not standard", i, i)
            continue
        sub = gately_value(reduced)
        rhs = sum(full[j] - sub[j] for j in range(g.n) if j != i)
        if full[i] != rhs:
            return False
    return True


def check_topdominance_implications(g: Game, alpha) -> bool:
    """alpha-top dominance must imply regularity and partitional superadditivity."""
    _require_standard(g)
    if not alpha_top_dominance(g, alpha).holds:
        return True
    report = classify(g)
    return report.regular and report.partitionally_superadditive
