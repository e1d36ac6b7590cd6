"""Exception hierarchy shared by every module."""


class ChipFiringError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(ChipFiringError, ValueError):
    """An argument does not satisfy an operation's precondition."""


class DomainError(ChipFiringError, ValueError):
    """A numeric parameter lies outside the domain of a construction."""


class BudgetExhausted(ChipFiringError):
    """A bounded search or simulation ran out of budget.

    ``rounds`` records how much work was done before giving up.
    """

    def __init__(self, message, rounds=None):
        super().__init__(message)
        self.rounds = rounds


class StructuralError(ChipFiringError):
    """The balance system does not have a one-dimensional kernel."""

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class NoPositiveSolution(ChipFiringError):
    """The kernel vector of a balance system has entries of mixed sign."""


class UnrealizableSequence(ChipFiringError, ValueError):
    """No game on a strongly connected digraph can produce this firing string."""


class GameFileError(ChipFiringError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)
        self.line = line
