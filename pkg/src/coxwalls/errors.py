"""Exception hierarchy shared by every module."""


class CoxwallsError(Exception):
    """Base class for all errors raised by coxwalls."""


class InvalidInputError(CoxwallsError, ValueError):
    """A word, element, path or file does not satisfy an operation's preconditions."""


class CapExceededError(CoxwallsError, RuntimeError):
    """An enumeration or recursion hit its configured cap.

    Raised instead of silently truncating; the caller must raise the cap.
    """

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap {cap}")
        self.what = what
        self.cap = cap


class PrecisionError(CoxwallsError, ArithmeticError):
    """A floating-point root sign could not be decided within tolerance."""


class UndeterminedCrossingError(CoxwallsError, RuntimeError):
    """The order test and the root test disagree about a pair of walls."""

    def __init__(self, first, second, detail: str = ""):
        msg = f"crossing of {first} and {second} is undetermined"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.pair = (first, second)


class InfeasibleError(CoxwallsError, ValueError):
    """Preconditions of a tracking correspondence fail; ``witness`` says where."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness
