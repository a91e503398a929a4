"""Exception types shared across the package."""


class PartitionAlgebraError(Exception):
    """Base class for every error raised by partalg."""


class MalformedPartitionError(PartitionAlgebraError, ValueError):
    """Blocks that do not form a set partition of the 2k vertex labels."""


class RankMismatchError(PartitionAlgebraError, ValueError):
    """Operands live in partition algebras of different rank."""


class IndexOutOfRangeError(PartitionAlgebraError, ValueError):
    """A generator or family index outside what the ambient rank supports."""


class CapExceededError(PartitionAlgebraError, ValueError):
    """A configured size budget (enumeration cap, tensor dimension) was exceeded."""


class UnknownSuiteError(PartitionAlgebraError, KeyError):
    """Verification suite name that is not registered."""
