"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class SizeCapExceeded(InputError):
    """Graph larger than the configured vertex cap."""


class BudgetExceeded(RuntimeError):
    """An oracle computation ran past one of its budget caps."""

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check
