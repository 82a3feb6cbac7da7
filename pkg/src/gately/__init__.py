"""Exact TU-game toolkit: Gately-type values, Core analysis and fixtures."""
from .errors import *  # noqa: F401,F403
from .game import (
    Coalition,
    DividendDecomposition,
    Game,
    GameClassReport,
    classify,
    coalition,
    dual_game,
    from_dividends,
    grand_coalition,
    harsanyi_dividends,
    individual_worths,
    is_partitionally_superadditive,
    is_superadditive,
    marginal_contributions,
    members,
    unanimity_game,
    worth,
    zero_normalise,
)
from .values import (
    INDETERMINATE,
    Allocation,
    Imputation,
    PropensityProfile,
    alpha_gately_value,
    alpha_limit_value,
    compromise_coefficient,
    dual_alpha_gately,
    dual_alpha_gately_closed_form,
    equal_division,
    gately_value,
    generalized_propensity,
    is_imputation,
    propensity_coalition,
    propensity_player,
    propensity_profile,
    shapley_value,
)
from .generators import GeneratorConfig, fixture_games, generate, paper_fixtures
