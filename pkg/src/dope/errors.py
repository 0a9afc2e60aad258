"""Exception hierarchy shared by every module."""


class DopeError(Exception):
    """Base class for all library errors."""


class BothZero(DopeError, ValueError):
    pass


class ZeroPolynomial(DopeError, ValueError):
    pass


class DimensionMismatch(DopeError, ValueError):
    pass


class OutOfDomain(DopeError, ValueError):
    pass


class BudgetExceeded(DopeError):
    pass


class CarryOverflow(DopeError, ValueError):
    """A carry would move past the last column; the row pair breaks the almost-safe budget."""


class ConditionViolated(DopeError, ValueError):
    pass


class DominanceViolated(DopeError, ValueError):
    pass


class NotSafe(DopeError, ValueError):
    pass


class NotSaturated(DopeError, ValueError):
    pass


class NotLimited(DopeError, ValueError):
    pass


class RetriesExhausted(DopeError):
    pass


class IncompleteTable(DopeError, ValueError):
    pass
