"""TU games over bitmask coalitions with exact rational worths.

A coalition is a plain ``int`` whose bit ``i`` is set when player ``i`` is a
member.  Coalitions are enumerated in increasing integer order, so
``range(1 << n)`` walks every coalition of an ``n``-player game.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import EmptyCoalition, TooManyPlayers

MAX_PLAYERS = 16

Coalition = int


def coalition(*players: int) -> Coalition:
    mask = 0
    for i in players:
        if i < 0:
            raise ValueError(f"negative player index {i}")
        mask |= 1 << i
    return mask


def members(s: Coalition) -> tuple[int, ...]:
    out = []
    i = 0
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return tuple(out)


def size(s: Coalition) -> int:
    return bin(s).count("1")


def grand_coalition(n: int) -> Coalition:
    return (1 << n) - 1


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class Game:
    """A cooperative game given by its dense worth table.

    ``worths[s]`` is the worth of coalition ``s``; the table has exactly
    ``2**n`` entries and ``worths[0] == 0``.
    """

    n: int
    worths: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"a game needs at least 2 players, got {self.n!r}")
        if self.n > MAX_PLAYERS:
            raise TooManyPlayers(f"{self.n} players exceeds the cap of {MAX_PLAYERS}")
        table = tuple(_as_fraction(w) for w in self.worths)
        if len(table) != 1 << self.n:
            raise ValueError(f"worth table has {len(table)} entries, expected {1 << self.n}")
        if table[0] != 0:
            raise ValueError("the empty coalition must have worth 0")
        object.__setattr__(self, "worths", table)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Coalition], object]) -> "Game":
        if n > MAX_PLAYERS:
            raise TooManyPlayers(f"{n} players exceeds the cap of {MAX_PLAYERS}")
        return cls(n, tuple([Fraction(0)] + [_as_fraction(fn(s)) for s in range(1, 1 << n)]))

    @classmethod
    def from_mapping(cls, n: int, table: Mapping[Coalition, object]) -> "Game":
        """Build a game from a sparse ``{coalition: worth}`` map; missing entries are 0."""
        if n > MAX_PLAYERS:
            raise TooManyPlayers(f"{n} players exceeds the cap of {MAX_PLAYERS}")
        full = 1 << n
        worths = [Fraction(0)] * full
        for s, w in table.items():
            if not 0 <= s < full:
                raise ValueError(f"coalition {s:#b} is not a subset of {n} players")
            worths[s] = _as_fraction(w)
        return cls(n, tuple(worths))

    @property
    def grand(self) -> Coalition:
        return (1 << self.n) - 1

    @property
    def players(self) -> range:
        return range(self.n)

    def worth(self, s: Coalition) -> Fraction:
        return self.worths[s]

    __call__ = worth

    def __add__(self, other: "Game") -> "Game":
        if not isinstance(other, Game):
            return NotImplemented
        _same_players(self, other)
        return Game(self.n, tuple(a + b for a, b in zip(self.worths, other.worths)))

    def __sub__(self, other: "Game") -> "Game":
        if not isinstance(other, Game):
            return NotImplemented
        _same_players(self, other)
        return Game(self.n, tuple(a - b for a, b in zip(self.worths, other.worths)))

    def __mul__(self, c) -> "Game":
        c = _as_fraction(c)
        return Game(self.n, tuple(c * w for w in self.worths))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"{_label(s)}: {w}" for s, w in enumerate(self.worths) if s and w)
        return f"Game(n={self.n}, {{{body}}})"


def _same_players(a: Game, b: Game) -> None:
    if a.n != b.n:
        raise ValueError(f"player counts differ: {a.n} vs {b.n}")


def _label(s: Coalition) -> str:
    return "".join(str(i + 1) for i in members(s)) or "{}"


def worth(g: Game, s: Coalition) -> Fraction:
    return g.worths[s]


def coalition_sums(x: Iterable, n: int) -> list:
    """Return ``x(S)`` for every coalition ``S`` in encoding order."""
    x = list(x)
    sums = [x[0] * 0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        sums[s] = sums[s ^ low] + x[low.bit_length() - 1]
    return sums


def individual_worths(g: Game) -> tuple[Fraction, ...]:
    return tuple(g.worths[1 << i] for i in range(g.n))


def marginal_contributions(g: Game) -> tuple[Fraction, ...]:
    top = g.worths[g.grand]
    return tuple(top - g.worths[g.grand ^ (1 << i)] for i in range(g.n))


def zero_normalise(g: Game) -> Game:
    nu = individual_worths(g)
    shift = coalition_sums(nu, g.n)
    return Game(g.n, tuple(w - d for w, d in zip(g.worths, shift)))


def dual_game(g: Game) -> Game:
    top = g.worths[g.grand]
    full = g.grand
    return Game(g.n, tuple(top - g.worths[full ^ s] for s in range(1 << g.n)))


@dataclass(frozen=True)
class DividendDecomposition:
    """Harsanyi dividends of a game, stored sparsely on their carrier."""

    n: int
    entries: Mapping[Coalition, Fraction]

    def __post_init__(self):
        clean = {}
        for s, d in sorted(self.entries.items()):
            if s <= 0 or s >= 1 << self.n:
                raise ValueError(f"coalition {s:#b} is not a nonempty subset of {self.n} players")
            d = _as_fraction(d)
            if d:
                clean[s] = d
        object.__setattr__(self, "entries", clean)

    @property
    def carrier(self) -> tuple[Coalition, ...]:
        return tuple(self.entries)

    def __getitem__(self, s: Coalition) -> Fraction:
        return self.entries.get(s, Fraction(0))


def harsanyi_dividends(g: Game) -> DividendDecomposition:
    # subset-sum Moebius inversion, O(n 2^n)
    a = list(g.worths)
    for i in range(g.n):
        bit = 1 << i
        for s in range(1 << g.n):
            if s & bit:
                a[s] -= a[s ^ bit]
    return DividendDecomposition(g.n, {s: d for s, d in enumerate(a) if d})


def from_dividends(d: DividendDecomposition, n: int | None = None) -> Game:
    n = d.n if n is None else n
    if n < d.n and any(s >> n for s in d.entries):
        raise ValueError(f"dividend carrier does not fit in {n} players")
    a = [Fraction(0)] * (1 << n)
    for s, w in d.entries.items():
        a[s] = w
    for i in range(n):
        bit = 1 << i
        for s in range(1 << n):
            if s & bit:
                a[s] += a[s ^ bit]
    return Game(n, tuple(a))


def unanimity_game(s: Coalition, n: int) -> Game:
    if s == 0:
        raise EmptyCoalition("the unanimity game of the empty coalition is undefined")
    if s >> n:
        raise ValueError(f"coalition {s:#b} is not a subset of {n} players")
    return Game(n, tuple(Fraction(1 if t & s == s else 0) for t in range(1 << n)))


@dataclass(frozen=True)
class GameClassReport:
    essential: bool
    semi_standard: bool
    semi_regular: bool
    standard: bool
    regular: bool
    zero_normalised: bool
    partitionally_superadditive: bool
    individual_worths: tuple[Fraction, ...]
    marginal_contributions: tuple[Fraction, ...]
    # None when n is too large for the 3^n disjoint-pair scan
    superadditive: bool | None = None


SUPERADDITIVE_MAX_N = 12


def is_partitionally_superadditive(g: Game) -> bool:
    top = g.worths[g.grand]
    half = 1 << (g.n - 1)
    # S and N\S pair up; fixing the top player's side visits each pair once
    return all(g.worths[s] + g.worths[g.grand ^ s] <= top for s in range(half))


def is_superadditive(g: Game) -> bool:
    w = g.worths
    for t in range(1, 1 << g.n):
        # proper nonempty submasks s of t, each unordered split seen twice
        s = (t - 1) & t
        while s:
            if w[s] + w[t ^ s] > w[t]:
                return False
            s = (s - 1) & t
    return True


def classify(g: Game) -> GameClassReport:
    nu = individual_worths(g)
    m = marginal_contributions(g)
    top = g.worths[g.grand]
    essential = sum(nu) <= top <= sum(m)
    semi_standard = all(a <= b for a, b in zip(nu, m))
    standard = semi_standard and any(a < b for a, b in zip(nu, m))
    return GameClassReport(
        essential=essential,
        semi_standard=semi_standard,
        semi_regular=essential and semi_standard,
        standard=standard,
        regular=essential and standard,
        zero_normalised=not any(nu),
        partitionally_superadditive=is_partitionally_superadditive(g),
        individual_worths=nu,
        marginal_contributions=m,
        superadditive=is_superadditive(g) if g.n <= SUPERADDITIVE_MAX_N else None,
    )
