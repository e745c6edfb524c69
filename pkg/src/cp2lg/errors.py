"""Exception types shared by the numeric modules."""


class PrecisionError(ArithmeticError):
    """A requested tolerance cannot be met within the hard caps."""


class PoleError(ArithmeticError):
    """Evaluation point too close to a pole."""


class BranchError(ArithmeticError):
    """Branch tracking or route agreement failed."""


class DiscriminantError(ArithmeticError):
    """Coalescing canonical coordinates or a degenerate chart."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location
