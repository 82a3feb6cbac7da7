"""Exception hierarchy shared by the solver, the analysis layer and the CLI."""


class GatelyError(Exception):
    """Base class for every error raised by this package."""


class AnalysisError(GatelyError):
    """A requested computation is undefined for the given game."""


class NotStandard(AnalysisError):
    pass


class NotSemiStandard(NotStandard):
    # not semi-standard implies not standard
    pass


class NotRegular(AnalysisError):
    pass


class EmptyCoalition(GatelyError, ValueError):
    pass


class BadCoalition(GatelyError, ValueError):
    pass


class NonImputation(AnalysisError):
    pass


class BetaZeroDegenerate(AnalysisError):
    pass


class EmptyImputationSet(AnalysisError):
    pass


class WrongPlayerCount(AnalysisError):
    pass


class NotTwoGame(AnalysisError):
    pass


class TargetUnreachable(GatelyError):
    pass


class GameFormatError(GatelyError):
    """The game document could not be turned into a game."""


class TooManyPlayers(GameFormatError, ValueError):
    pass


class UnknownLabel(GameFormatError):
    pass


class DuplicateCoalition(GameFormatError):
    pass


class MissingGrandCoalition(GameFormatError):
    pass
