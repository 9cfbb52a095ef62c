"""
Exceptions raised by fastperc.

Every error derives from `PercolationError` so the command line runner
can map library failures onto exit codes. Errors caused by bad
arguments also derive from `ValueError`.
"""


class PercolationError(Exception):
    pass


class ZeroDisplacement(PercolationError, ValueError):
    pass


class DimensionMismatch(PercolationError, ValueError):
    pass


class OverlappingSets(PercolationError, ValueError):
    pass


class DivergentTail(PercolationError, ValueError):
    pass


class SelfLoop(PercolationError, ValueError):
    pass


class SameStream(PercolationError, ValueError):
    pass


class BudgetInfeasible(PercolationError):
    pass


class SourceOutsideSet(PercolationError, ValueError):
    pass


class EmptySet(PercolationError, ValueError):
    pass


class EmptySources(PercolationError, ValueError):
    pass


class EmptyProxy(PercolationError, ValueError):
    pass


class SubcriticalRegime(PercolationError):
    pass


class DegenerateNorm(PercolationError, ValueError):
    pass


class TooLarge(PercolationError, ValueError):
    pass


class NoCrossing(PercolationError):
    pass


class OriginMissing(PercolationError, ValueError):
    pass


class GeometryInfeasible(PercolationError, ValueError):
    pass


class SplitInvalid(PercolationError, ValueError):
    pass


class IsolatedStart(PercolationError, ValueError):
    pass


class Disconnected(PercolationError):
    pass


class ConfigParse(PercolationError, ValueError):
    pass


class UnknownExperiment(PercolationError, ValueError):
    pass
