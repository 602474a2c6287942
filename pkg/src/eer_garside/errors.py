"""Exception hierarchy shared by the whole package."""


class GarsideError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class PresentationError(GarsideError, ValueError):
    pass


class ParseError(PresentationError):
    pass


class NotComplemented(PresentationError):
    pass


class NotHomogeneous(PresentationError):
    pass


class StuckReversal(GarsideError):
    """A factor x^-1 y was met for which no relation x... = y... exists."""

    def __init__(self, x: int, y: int):
        super().__init__(f"no relation with heads ({x}, {y})")
        self.x = x
        self.y = y


class BudgetExceeded(GarsideError):
    def __init__(self, budget: int, what: str = "reversal"):
        super().__init__(f"{what} exceeded its budget of {budget} steps")
        self.budget = budget


class NoPeriodFound(GarsideError):
    pass
