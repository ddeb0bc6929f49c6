"""Exception hierarchy shared by every latpath module."""


class LatpathError(Exception):
    """Base class for all errors raised by latpath."""


class DomainError(LatpathError, ValueError):
    """An argument lies outside the domain of the operation (parity, range, wall)."""


class UnsupportedCaseError(LatpathError, ValueError):
    """The requested case is not covered by the formula being evaluated."""


class EnumerationGuardError(LatpathError):
    """Exhaustive enumeration was refused because the path length exceeds the guard."""


class IncompleteSeedError(LatpathError, KeyError):
    """A boundary point was given no seed value."""


class WZPoleError(LatpathError, ZeroDivisionError):
    """A WZ certificate was evaluated where one of its denominator factors vanishes."""

    def __init__(self, factor: str, n: int, j: int, k: int):
        self.factor = factor
        self.n, self.j, self.k = n, j, k
        super().__init__(f"pole: factor {factor} vanishes at n={n}, j={j}, k={k}")
