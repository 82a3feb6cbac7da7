"""Seeded game generators and the named fixture games.

Randomness comes from splitmix64 so that a given seed produces the same
games in any language:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
    output z xor (z >> 31)

Bounded integers use rejection on the top of the 64-bit range, so they are
unbiased.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import TargetUnreachable
from .game import (
    DividendDecomposition,
    Game,
    classify,
    coalition,
    from_dividends,
    grand_coalition,
    size,
    unanimity_game,
)

MASK64 = (1 << 64) - 1
MAX_RETRIES = 10_000
TARGETS = (
    "any",
    "standard",
    "regular",
    "semi_regular",
    "zero_normalised_regular",
    "k_game",
    "partition_game",
)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next()
            if r < limit:
                return r % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


@dataclass(frozen=True)
class GeneratorConfig:
    """What to generate.

    ``k`` is used by ``k_game`` and ``partition_game``; ``m`` only by
    ``partition_game``, which needs ``n = k * m`` and ``k != m``.
    """

    seed: int = 0
    n: int = 3
    worth_bound: int = 10
    class_target: str = "regular"
    k: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.class_target not in TARGETS:
            raise ValueError(f"unknown class target {self.class_target!r}")
        if self.worth_bound < 1:
            raise ValueError("worth_bound must be a positive integer")

    @classmethod
    def from_target(cls, target: str, **kw) -> "GeneratorConfig":
        """Parse targets written as ``k_game(2)`` or ``partition_game(2,3)``."""
        m = re.fullmatch(r"\s*(\w+)\s*(?:\(([\d,\s]*)\))?\s*", target)
        if not m:
            raise ValueError(f"cannot parse class target {target!r}")
        name, args = m.group(1), m.group(2)
        nums = [int(a) for a in args.split(",") if a.strip()] if args else []
        if name == "k_game" and len(nums) == 1:
            return cls(class_target=name, k=nums[0], **kw)
        if name == "partition_game" and len(nums) == 2:
            return cls(class_target=name, k=nums[0], m=nums[1], **kw)
        if nums or name in ("k_game", "partition_game"):
            raise ValueError(f"wrong arguments for class target {target!r}")
        return cls(class_target=name, **kw)


def _rational(rng: SplitMix64, bound: int, signed: bool = False) -> Fraction:
    num = rng.between(-bound if signed else 0, bound)
    return Fraction(num, rng.between(1, bound))


def _positive(rng: SplitMix64, bound: int) -> Fraction:
    return Fraction(rng.between(1, bound), rng.between(1, bound))


def _table(rng: SplitMix64, n: int, bound: int, signed: bool, zero_singletons: bool) -> list[Fraction]:
    grand = grand_coalition(n)
    w = [Fraction(0)] * (grand + 1)
    for s in range(1, grand):
        if zero_singletons and size(s) == 1:
            continue
        w[s] = _rational(rng, bound, signed)
    return w


def _set_grand(rng: SplitMix64, w: list[Fraction], n: int, bound: int, essential: bool) -> None:
    """Put v(N) at the smallest level compatible with the target plus an offset.

    ``M_i >= v_i`` needs ``v(N) >= v(N-i) + v_i``; essentiality adds
    ``v(N) >= sum v_i`` and ``(n-1) v(N) >= sum_i v(N-i)``.  A zero offset
    (one draw in four) lands on the boundary.
    """
    grand = grand_coalition(n)
    singles = [w[1 << i] for i in range(n)]
    bounds = [w[grand ^ (1 << i)] + singles[i] for i in range(n)]
    if essential:
        bounds.append(sum(singles))
        bounds.append(sum(w[grand ^ (1 << i)] for i in range(n)) / (n - 1))
    offset = Fraction(0) if rng.below(4) == 0 else _positive(rng, bound)
    w[grand] = max(bounds) + offset


def _matches(g: Game, cfg: GeneratorConfig) -> bool:
    report = classify(g)
    target = cfg.class_target
    if target == "any":
        return True
    if target == "standard":
        return report.standard
    if target == "regular":
        return report.regular
    if target == "semi_regular":
        return report.semi_regular
    if target == "zero_normalised_regular":
        return report.regular and report.zero_normalised
    if target == "k_game":
        from .analysis.structure import kgame_structure

        st = kgame_structure(g)
        return st.is_k_game and st.k == cfg.k
    if target == "partition_game":
        return report.regular
    raise ValueError(target)  # pragma: no cover


def _check_config(cfg: GeneratorConfig) -> None:
    n = cfg.n
    if cfg.class_target == "k_game":
        if cfg.k is None or not 2 <= cfg.k <= n - 1:
            raise TargetUnreachable(f"k_game needs 2 <= k <= n-1, got k={cfg.k}, n={n}")
    if cfg.class_target == "partition_game":
        k, m = cfg.k, cfg.m
        if k is None or m is None or k < 1 or m < 1 or k == m or k * m != n:
            raise TargetUnreachable(f"partition_game needs n = k*m with k != m, got k={k}, m={m}, n={n}")


def _propose(rng: SplitMix64, cfg: GeneratorConfig) -> Game:
    n, bound, target = cfg.n, cfg.worth_bound, cfg.class_target
    if target == "k_game":
        ks = [s for s in range(1, grand_coalition(n) + 1) if size(s) == cfg.k]
        chosen = [s for s in ks if rng.below(2)] or [ks[rng.below(len(ks))]]
        entries = {}
        for s in chosen:
            d = _positive(rng, bound)
            entries[s] = -d if rng.below(8) == 0 else d
        return from_dividends(DividendDecomposition(n, entries))
    if target == "partition_game":
        delta = _positive(rng, bound)
        entries = {}
        for width in (cfg.k, cfg.m):
            order = rng.shuffle(list(range(n)))
            for start in range(0, n, width):
                entries[coalition(*order[start:start + width])] = delta
        return from_dividends(DividendDecomposition(n, entries))
    if target == "any":
        w = _table(rng, n, bound, signed=True, zero_singletons=False)
        w[grand_coalition(n)] = _rational(rng, bound, signed=True)
        return Game(n, tuple(w))
    zero = target == "zero_normalised_regular"
    w = _table(rng, n, bound, signed=rng.below(4) == 0, zero_singletons=zero)
    _set_grand(rng, w, n, bound, essential=target != "standard")
    return Game(n, tuple(w))


def generate(cfg: GeneratorConfig) -> Game:
    """Draw a game satisfying ``cfg.class_target``; same config, same game."""
    _check_config(cfg)
    rng = SplitMix64(cfg.seed)
    for _ in range(MAX_RETRIES):
        g = _propose(rng, cfg)
        if _matches(g, cfg):
            return g
    raise TargetUnreachable(f"no {cfg.class_target} game after {MAX_RETRIES} draws")


def generate_many(cfg: GeneratorConfig, count: int) -> list[Game]:
    """``count`` games from consecutive seeds starting at ``cfg.seed``."""
    return [generate(GeneratorConfig(cfg.seed + i, cfg.n, cfg.worth_bound, cfg.class_target, cfg.k, cfg.m))
            for i in range(count)]


@dataclass(frozen=True)
class Fixture:
    name: str
    game: Game
    labels: tuple[str, ...]
    description: str = ""


def _pairs(n: int, singles, pairs, triples=None, grand=None) -> Game:
    table = {}
    for i, w in enumerate(singles):
        table[1 << i] = w
    for key, w in pairs.items():
        table[coalition(*(int(c) - 1 for c in key))] = w
    for key, w in (triples or {}).items():
        table[coalition(*(int(c) - 1 for c in key))] = w
    table[grand_coalition(n)] = grand
    return Game.from_mapping(n, table)


def _numbered(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def fixture_table() -> dict[str, Fixture]:
    """The named fixture games with their player labels."""
    out = {}

    def add(name, game, labels, description):
        out[name] = Fixture(name, game, labels, description)

    add("trade", Game.from_mapping(3, {0b001: 1, 0b011: 3, 0b101: 2, 0b111: 3}), ("S", "B1", "B2"),
        "one seller, two buyers with reservation prices 3 and 2")
    add("continuum3", _pairs(3, (2, 1, 0), {"12": 4, "13": 4, "23": 4}, grand=5), _numbered(3),
        "net marginal contributions sum to zero: no unique Gately point")
    add("emptycore3", _pairs(3, (5, 0, 0), {"12": 1, "13": 1, "23": 5}, grand=6), _numbered(3),
        "essential, not semi-standard, empty Core")
    add("alpha_interval3", _pairs(3, (0, 0, 0), {"12": 12, "13": 7, "23": 7}, grand=16), _numbered(3),
        "zero-normalised regular game whose alpha-Gately value leaves the Core for small alpha")
    add("singleton_core3", _pairs(3, (0, 0, 0), {"12": 5, "13": 6, "23": 7}, grand=9), _numbered(3),
        "Core is the single point M(v) = (2,3,4)")
    add("fourplayer_core_miss",
        _pairs(4, (0, 0, 0, 0), {"12": 8, "13": 1, "14": 1, "23": 1, "24": 1, "34": 1},
               {"123": 9, "124": 9, "134": 8, "234": 8}, grand=12),
        _numbered(4), "nonempty Core that misses both the Gately and the Shapley value")
    add("topdom_nonsuper3", _pairs(3, (0, 0, 0), {"12": -1, "13": -1, "23": 0}, grand=1), _numbered(3),
        "alpha-top dominant for all alpha but not superadditive")
    add("fiveplayer_unanimity", unanimity_game(coalition(0, 1), 5) + 3 * unanimity_game(coalition(2, 3, 4), 5),
        _numbered(5), "u_12 + 3 u_345: convex, Gately value outside the Core")
    add("kgame_demo",
        unanimity_game(coalition(0, 1), 3) + unanimity_game(coalition(0, 2), 3) + unanimity_game(coalition(1, 2), 3),
        _numbered(3), "2-game u_12 + u_13 + u_23 where Gately and Shapley agree")
    return out


def fixture_games() -> dict[str, Game]:
    """Name -> game for the fixture corpus."""
    return {name: f.game for name, f in fixture_table().items()}


# historical name of fixture_games
paper_fixtures = fixture_games
