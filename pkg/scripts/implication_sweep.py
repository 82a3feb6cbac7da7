"""Random sweep of the Core and value characterisations over generated games.

For each player count, counts how often each checked implication held and
prints any counterexample seeds.
"""
import argparse
import time
from dataclasses import dataclass

from gately import dual_alpha_gately, gately_value
from gately.analysis import (
    alpha_top_dominance,
    check_gately_equals_shapley,
    check_maincore_iff,
    check_topdominance_implications,
    three_player_core_check,
)
from gately.generators import GeneratorConfig, generate


@dataclass
class Config:
    seed: int = 0
    count: int = 300
    sizes: tuple[int, ...] = (3, 4, 5)
    alphas: tuple = (0.5, 1, 2)


def main(cfg: Config) -> None:
    t0 = time.time()
    for n in cfg.sizes:
        bad = []
        top = 0
        for i in range(cfg.count):
            seed = cfg.seed + 10_000 * n + i
            g = generate(GeneratorConfig(seed=seed, n=n, class_target="standard"))
            for a in cfg.alphas:
                top += alpha_top_dominance(g, a).holds
                if not check_maincore_iff(g, a) or not check_topdominance_implications(g, a):
                    bad.append((seed, a))
            r = generate(GeneratorConfig(seed=seed, n=n, class_target="regular"))
            if dual_alpha_gately(r, 1).payoffs != gately_value(r).payoffs:
                bad.append((seed, "dual"))
            if n >= 3:
                k = generate(GeneratorConfig(seed=seed, n=n, class_target="k_game", k=2))
                if not check_gately_equals_shapley(k):
                    bad.append((seed, "k-game"))
            if n == 3 and not three_player_core_check(generate(GeneratorConfig(seed=seed, n=3, class_target="any"))).holds:
                bad.append((seed, "3-player"))
        print(f"n={n}: {cfg.count} games, {top} top-dominant (game, alpha) pairs, counterexamples: {bad or 'none'}")
    print(f"done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    args = p.parse_args()
    main(Config(args.seed, args.count, tuple(args.sizes)))
