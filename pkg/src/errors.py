"""Exception hierarchy for the blocks toolkit."""


class BrauerError(ValueError):
    """Base class for all input and construction errors."""


class InvalidContextError(BrauerError):
    """Rank, characteristic or parameter outside the supported range."""


class InvalidWeightError(BrauerError):
    """Malformed weight or partition, or one that does not fit the rank."""


class UnsupportedParameterError(BrauerError):
    """Operation is not defined for the given parameters (e.g. delta = 0)."""


class NotBalancedError(BrauerError):
    """The pair of partitions is not balanced."""


class ChainConstructionError(BrauerError):
    """A reflection chain could not be extended. Indicates a defect."""


class DiagramError(BrauerError):
    """Malformed or size-mismatched Brauer diagram."""
