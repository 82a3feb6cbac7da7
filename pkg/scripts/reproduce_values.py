"""Print the main values and Core facts for every fixture game."""
import argparse
from dataclasses import dataclass

from gately import classify, gately_value, shapley_value
from gately.analysis import core_membership, core_nonempty, nucleolus
from gately.errors import GatelyError
from gately.generators import fixture_table
from gately.io import format_number


@dataclass
class Config:
    names: tuple[str, ...] = ()


def _fmt(fn, g):
    try:
        x = fn(g)
    except GatelyError as exc:
        return f"{type(exc).__name__}", None
    return "(" + ", ".join(format_number(p).split(" ")[0] for p in x) + ")", x


def main(cfg: Config) -> None:
    for name, fx in fixture_table().items():
        if cfg.names and name not in cfg.names:
            continue
        g = fx.game
        rep = classify(g)
        print(f"{name}: n={g.n} regular={rep.regular} semi_regular={rep.semi_regular}")
        for label, fn in (("gately", gately_value), ("shapley", shapley_value), ("nucleolus", nucleolus)):
            text, x = _fmt(fn, g)
            in_core = "" if x is None else f"  in core: {core_membership(g, x).member}"
            print(f"  {label:9s} {text}{in_core}")
        status = core_nonempty(g)
        print(f"  core nonempty: {status.nonempty}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("names", nargs="*")
    args = p.parse_args()
    main(Config(tuple(args.names)))
