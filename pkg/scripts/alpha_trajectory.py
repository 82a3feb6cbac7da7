"""Trace the alpha-Gately value of the singleton-Core game over a log grid.

Prints a CSV of alpha and the three payoffs, then the largest payoff of
player 2 along the path (the path is not monotone in alpha).
"""
import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from gately import alpha_gately_value, alpha_limit_value, fixture_games


@dataclass
class Config:
    lo: float = 1e-3
    hi: float = 1e3
    points: int = 61
    game: str = "singleton_core3"


def main(cfg: Config) -> None:
    g = fixture_games()[cfg.game]
    out = csv.writer(sys.stdout)
    out.writerow(["alpha"] + [f"x{i + 1}" for i in range(g.n)])
    for a in np.geomspace(cfg.lo, cfg.hi, cfg.points):
        out.writerow([f"{a:.6g}"] + [f"{p:.9f}" for p in alpha_gately_value(g, float(a))])
    res = minimize_scalar(lambda la: -alpha_gately_value(g, float(np.exp(la)))[1], bounds=(-5, 5), method="bounded",
                          options={"xatol": 1e-10})
    print(f"# max x2 = {-res.fun:.6f} at alpha = {np.exp(res.x):.6f}")
    print(f"# alpha -> 0 limit {tuple(str(p) for p in alpha_limit_value(g, 'zero'))}")
    print(f"# alpha -> inf limit {tuple(str(p) for p in alpha_limit_value(g, 'infinity'))}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=float, default=Config.lo)
    p.add_argument("--hi", type=float, default=Config.hi)
    p.add_argument("--points", type=int, default=Config.points)
    p.add_argument("--game", default=Config.game)
    main(Config(**vars(p.parse_args())))
