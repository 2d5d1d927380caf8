"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input violates an operation's documented precondition."""


class ZeroResidue(PreconditionError):
    """A residue that must be invertible is divisible by p."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class YDivisible(PreconditionError):
    pass


class DuplicateResidue(PreconditionError):
    pass


class RangeError(PreconditionError):
    pass


class SizeLimit(PreconditionError):
    """Input too large for an exhaustive (oracle) computation."""


class PrecisionExhausted(ArithmeticError):
    """The precision budget could not certify the requested quantity."""


class ConfigError(ValueError):
    def __init__(self, message, field=None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class DegenerateFit(ValueError):
    pass
