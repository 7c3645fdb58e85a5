"""Exception types shared by the codecs, oracles and the command line."""


class DigitEccError(ValueError):
    exit_code = 1


class UsageError(DigitEccError):
    """Invalid parameters or mismatched operands."""

    exit_code = 1


class DomainError(UsageError):
    """Arguments outside the scope where an operation is defined."""


class CapacityError(UsageError):
    """A message does not fit the requested code family."""


class BudgetError(UsageError):
    """An exhaustive search or enumeration would exceed its budget."""


class DataError(DigitEccError):
    """Malformed word or message data."""

    exit_code = 2


class DecoderInvariantError(AssertionError):
    exit_code = 3
