"""Exception types shared across the package."""


class IntegralityError(ArithmeticError):
    """An exact quantity that must be an integer came out fractional."""


class VerificationError(AssertionError):
    """A checked identity or structural property failed."""


class RouteDisagreement(VerificationError):
    """Two independent routes produced different values for the same cell."""

    def __init__(self, cell, values):
        self.cell = dict(cell)
        self.values = dict(values)
        parts = ", ".join(f"{route}={value}" for route, value in self.values.items())
        super().__init__(f"routes disagree at {self.cell}: {parts}")
