"""
Exception hierarchy. Every error is a ``ValueError`` that also
records the module it was raised from.
"""


class StokesError(ValueError):

    module = 'stokes'

    def __init__(self, message: str, module: str = None):
        super().__init__(message)
        if module is not None:
            self.module = module

    def __str__(self):
        return '[{}] {}'.format(self.module, super().__str__())


class PolynomialSyntaxError(StokesError):

    module = 'poly'

    def __init__(self, message: str, position: int):
        super().__init__('{} at position {}'.format(message, position))
        self.position = position


class EmptySupportError(StokesError):
    module = 'poly'


class UnsupportedTypeError(StokesError):
    module = 'poly'


class InvalidCoefficientError(StokesError):
    module = 'poly'


class DegenerateHullError(StokesError):
    module = 'lattice'


class GrowthDiagramError(StokesError):
    module = 'growth'


class DegenerateSweepError(StokesError):
    module = 'growth'


class ResolutionInstabilityError(DegenerateSweepError):
    pass


class WordError(StokesError):
    module = 'words'


class RankMismatchError(WordError):
    pass


class FlagError(StokesError):
    module = 'flags'


class ConfigurationError(StokesError):
    module = 'flags'


class GraphError(StokesError):
    module = 'bipartite'


class MovePatternError(GraphError):
    pass


class PipelineError(StokesError):
    module = 'pipeline'


class InsufficientResolutionError(StokesError):
    module = 'growth'
