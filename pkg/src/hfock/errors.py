"""Exception taxonomy shared by all modules."""


class ConfigurationError(ValueError):
    """An argument is outside the supported configuration range."""


class DomainError(ValueError):
    """A mathematical argument is outside the domain of the operation."""


class ValidationError(ValueError):
    """Structured input failed a consistency check (e.g. non-Hermitian matrix)."""


class PrecisionLossError(ValueError):
    """The requested computation cannot be delivered at double precision."""


class AccuracyError(ArithmeticError):
    """The error target could not be met within the work budget.

    The best available result, when one exists, is attached as ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
