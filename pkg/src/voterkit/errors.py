"""Semantic exceptions shared by all voterkit modules."""


class VoterKitError(Exception):
    """Base class for all voterkit errors."""


class DomainError(VoterKitError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NumericalError(VoterKitError, ArithmeticError):
    """An iterative numerical scheme failed to reach its tolerance.

    Attributes carry diagnostic context where available: ``iterations`` for
    iteration-capped schemes, ``achieved_tol`` for tolerance-driven ones.
    """

    def __init__(self, message: str, *, iterations: int | None = None,
                 achieved_tol: float | None = None):
        super().__init__(message)
        self.iterations = iterations
        self.achieved_tol = achieved_tol


class GraphConstructionError(VoterKitError, ValueError):
    """A network specification cannot be realised as a valid graph."""
