"""JSON game files and number formatting.

A game file looks like::

    {"name": "trade", "players": ["S", "B1", "B2"],
     "worths": {"S": 1, "S,B1": 3, "S,B2": 2, "S,B1,B2": 3}}

Keys are comma-joined player labels; missing coalitions are worth 0.
Worths may be integers, decimals (read exactly) or strings such as "7/2".
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from .errors import (
    DuplicateCoalition,
    GameFormatError,
    MissingGrandCoalition,
    TooManyPlayers,
    UnknownLabel,
)
from .game import MAX_PLAYERS, Coalition, Game, grand_coalition, members, size

SIG_DIGITS = 12


@dataclass(frozen=True)
class LabelledGame:
    game: Game
    labels: tuple[str, ...]
    name: str | None = None
    description: str | None = None

    def coalition_of(self, labels: Iterable[str]) -> Coalition:
        index = {lab: i for i, lab in enumerate(self.labels)}
        s = 0
        for lab in labels:
            if lab not in index:
                raise UnknownLabel(f"unknown player label {lab!r}")
            s |= 1 << index[lab]
        return s


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def parse_rational(value) -> Fraction:
    """Exact rational from an int, a Decimal, or a string like "7/2" or "0.25"."""
    if isinstance(value, bool):
        raise GameFormatError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise GameFormatError(f"not a finite number: {value}")
        return Fraction(value)
    if isinstance(value, float):
        # only reachable for callers bypassing the Decimal-based JSON reader
        if not math.isfinite(value):
            raise GameFormatError(f"not a finite number: {value}")
        return Fraction(Decimal(repr(value)))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GameFormatError(f"not a rational literal: {value!r}") from None
    raise GameFormatError(f"not a number: {value!r}")


def _no_duplicate_keys(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise DuplicateCoalition(f"key {key!r} appears twice")
        out[key] = value
    return out


def _reject_constant(token):
    raise GameFormatError(f"not a finite number: {token}")


def parse_game(text: str) -> LabelledGame:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys, parse_float=Decimal,
                         parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GameFormatError("a game document must be a JSON object")
    unknown = set(doc) - {"name", "description", "players", "worths"}
    if unknown:
        raise GameFormatError(f"unexpected fields: {', '.join(sorted(unknown))}")
    players = doc.get("players")
    if not isinstance(players, list) or not all(isinstance(p, str) for p in players):
        raise GameFormatError("'players' must be a list of strings")
    if len(players) > MAX_PLAYERS:
        raise TooManyPlayers(f"{len(players)} players, at most {MAX_PLAYERS} supported")
    if len(players) < 2:
        raise GameFormatError("a game needs at least 2 players")
    if len(set(players)) != len(players):
        raise GameFormatError("player labels must be distinct")
    for p in players:
        if not p or "," in p or p != p.strip():
            raise GameFormatError(f"bad player label {p!r}")
    worths = doc.get("worths")
    if not isinstance(worths, dict):
        raise GameFormatError("'worths' must be an object")
    for key in ("name", "description"):
        if key in doc and not isinstance(doc[key], str):
            raise GameFormatError(f"'{key}' must be a string")

    n = len(players)
    index = {p: i for i, p in enumerate(players)}
    table: dict[Coalition, Fraction] = {}
    for key, value in worths.items():
        s = 0
        for lab in (part.strip() for part in key.split(",")):
            if lab not in index:
                raise UnknownLabel(f"unknown player label {lab!r} in key {key!r}")
            bit = 1 << index[lab]
            if s & bit:
                raise GameFormatError(f"label {lab!r} repeated in key {key!r}")
            s |= bit
        if s in table:
            raise DuplicateCoalition(f"coalition {key!r} given twice")
        table[s] = parse_rational(value)
    if grand_coalition(n) not in table:
        raise MissingGrandCoalition("the grand coalition's worth is missing")
    return LabelledGame(Game.from_mapping(n, table), tuple(players), doc.get("name"), doc.get("description"))


def load_game(path) -> LabelledGame:
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def _literal(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coalition_key(s: Coalition, labels) -> str:
    return ",".join(labels[i] for i in members(s))


def serialise(game: Game, labels=None, name: str | None = None, description: str | None = None) -> str:
    """JSON text for ``game``; zero worths are left out except for the grand coalition."""
    labels = tuple(labels) if labels is not None else default_labels(game.n)
    if len(labels) != game.n:
        raise ValueError("one label per player is needed")
    doc = {}
    if name is not None:
        doc["name"] = name
    if description is not None:
        doc["description"] = description
    doc["players"] = list(labels)
    grand = game.grand
    order = sorted(range(1, grand + 1), key=lambda s: (size(s), members(s)))
    doc["worths"] = {coalition_key(s, labels): _literal(game.worths[s])
                     for s in order if game.worths[s] or s == grand}
    return json.dumps(doc, indent=2) + "\n"


def decimal_string(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def format_number(x) -> str:
    """``p/q (decimal)`` for rationals, the integer for integers, ``decimal (approx)`` for floats."""
    if isinstance(x, (Fraction, int)):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator} ({decimal_string(x)})"
    if math.isinf(x):
        return f"{'-' if x < 0 else ''}inf"
    return f"{x:.{SIG_DIGITS}g} (approx)"


def coalition_label(s: Coalition, labels) -> str:
    return "{" + ",".join(labels[i] for i in members(s)) + "}"
