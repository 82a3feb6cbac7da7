import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gately import classify, harsanyi_dividends
from gately.analysis import kgame_structure
from gately.errors import TargetUnreachable
from gately.game import size
from gately.generators import GeneratorConfig, SplitMix64, fixture_table, generate, generate_many, fixture_games, paper_fixtures


def test_splitmix64_reference_outputs():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix64_bounded_draws():
    rng = SplitMix64(7)
    draws = [rng.below(6) for _ in range(6000)]
    assert set(draws) == set(range(6))
    assert all(600 < draws.count(k) < 1400 for k in range(6))
    assert sorted(rng.shuffle(list(range(10)))) == list(range(10))
    with pytest.raises(ValueError):
        rng.below(0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**64 - 1), st.sampled_from(["any", "standard", "regular", "semi_regular",
                                                    "zero_normalised_regular"]), st.integers(2, 6))
def test_generation_is_deterministic_and_on_target(seed, target, n):
    cfg = GeneratorConfig(seed=seed, n=n, class_target=target)
    g = generate(cfg)
    assert generate(cfg) == g
    rep = classify(g)
    assert {
        "any": True,
        "standard": rep.standard,
        "regular": rep.regular,
        "semi_regular": rep.semi_regular,
        "zero_normalised_regular": rep.regular and rep.zero_normalised,
    }[target]


def test_seeds_differ():
    games = generate_many(GeneratorConfig(seed=0, n=4, class_target="regular"), 20)
    assert len({g.worths for g in games}) == 20


def test_worth_bound_respected_off_the_grand_coalition():
    for g in generate_many(GeneratorConfig(seed=3, n=4, worth_bound=3, class_target="any"), 20):
        for s in range(1, g.grand + 1):
            w = g.worths[s]
            assert abs(w.numerator) <= 3 and w.denominator <= 3


def test_regular_target():
    assert classify(generate(GeneratorConfig(seed=1, n=3, class_target="regular"))).regular


def test_k_games():
    for k, n in [(2, 4), (3, 5), (2, 6), (4, 6)]:
        for g in generate_many(GeneratorConfig(seed=10, n=n, class_target="k_game", k=k), 10):
            st_ = kgame_structure(g)
            assert st_.is_k_game and st_.k == k


def test_partition_games():
    for g in generate_many(GeneratorConfig(seed=2, n=6, class_target="partition_game", k=2, m=3), 20):
        d = harsanyi_dividends(g)
        assert len(set(d.entries.values())) == 1
        pairs = [s for s in d.carrier if size(s) == 2]
        triples = [s for s in d.carrier if size(s) == 3]
        assert len(pairs) == 3 and len(triples) == 2 and len(d.carrier) == 5
        for block in (pairs, triples):
            union = 0
            for s in block:
                assert union & s == 0
                union |= s
            assert union == g.grand


def test_unreachable_targets():
    with pytest.raises(TargetUnreachable):
        generate(GeneratorConfig(n=4, class_target="k_game", k=4))
    with pytest.raises(TargetUnreachable):
        generate(GeneratorConfig(n=4, class_target="k_game"))
    with pytest.raises(TargetUnreachable):
        generate(GeneratorConfig(n=6, class_target="partition_game", k=2, m=2))
    with pytest.raises(ValueError):
        GeneratorConfig(class_target="convex")
    with pytest.raises(ValueError):
        GeneratorConfig(worth_bound=0)


def test_target_parsing():
    assert GeneratorConfig.from_target("k_game(2)", n=4).k == 2
    cfg = GeneratorConfig.from_target("partition_game(2, 3)", n=6, seed=5)
    assert (cfg.k, cfg.m, cfg.seed) == (2, 3, 5)
    assert GeneratorConfig.from_target("regular").class_target == "regular"
    for bad in ("k_game", "regular(2)", "partition_game(2)", "k_game(x)"):
        with pytest.raises(ValueError):
            GeneratorConfig.from_target(bad)


def test_fixture_names_and_labels():
    table = fixture_table()
    assert list(table) == ["trade", "continuum3", "emptycore3", "alpha_interval3", "singleton_core3",
                           "fourplayer_core_miss", "topdom_nonsuper3", "fiveplayer_unanimity", "kgame_demo"]
    assert table["trade"].labels == ("S", "B1", "B2")
    assert set(fixture_games()) == set(table)
    assert paper_fixtures is fixture_games
