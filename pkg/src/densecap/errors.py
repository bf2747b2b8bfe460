class DomainError(ValueError):
    """Parameters outside the physical or mathematical domain of an operation."""


class NotHermitian(DomainError):
    pass


class NotPositiveSemidefinite(DomainError):
    pass


class InvalidTemperature(DomainError):
    pass


class WrongModelKind(DomainError):
    pass


class InvalidBracket(DomainError):
    pass


class ZeroCoupling(DomainError):
    """Closed-form expressions are undefined at J = 0."""
