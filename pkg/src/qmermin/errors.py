class NumericalConsistencyError(ArithmeticError):
    """A quantity that must be real (or finite) came out otherwise."""


class CapacityError(ValueError):
    """Requested a dense object too large to materialize."""
