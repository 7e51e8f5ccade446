"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input data."""


class ZeroModuleError(ValueError):
    """An invariant was requested on the zero module, where it is undefined."""


class NotAReductionError(ArithmeticError):
    """The given ideal of linear forms does not reduce the module within the scan cap."""


class AnnihilatedError(ArithmeticError):
    """``I^n M`` vanished inside a series computation."""

    def __init__(self, n: int):
        super().__init__(f"module eventually annihilated: I^{n} M = 0")
        self.n = n
