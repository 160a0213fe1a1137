"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Base class for invalid algebra input."""


class InfiniteDimensional(AlgebraError):
    pass


class NotConnected(AlgebraError):
    pass


class BadRelation(AlgebraError):
    pass


class InvalidKupisch(AlgebraError):
    pass


class NonSemisimpleRequired(AlgebraError):
    """Raised for semisimple input; every algebra here must have an arrow."""


class ZeroModule(ValueError):
    """Top, socle, cover or envelope requested for the zero module."""


class Inconclusive(RuntimeError):
    """A randomized isomorphism search found no witness but could not rule one out."""


class ParseError(ValueError):
    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
