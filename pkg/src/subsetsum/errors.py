"""Exception types shared across the package.

Each maps to a CLI exit code (see ``subsetsum.cli``).
"""


class SubsetSumError(Exception):
    exit_code = 1


class InvalidInput(SubsetSumError, ValueError):
    exit_code = 2


class Overflow(SubsetSumError, ArithmeticError):
    """A value left the unsigned 64-bit range.

    ``stage`` is the first construction stage that could not be formed, when known.
    """

    exit_code = 3

    def __init__(self, msg, stage=None):
        super().__init__(msg)
        self.stage = stage


class ResourceLimit(SubsetSumError, MemoryError):
    exit_code = 4


class NoBaseConstruction(SubsetSumError):
    """No complete list of distinct parts sums to b1 - 1."""

    exit_code = 2


U64_MAX = (1 << 64) - 1


def checked(value: int) -> int:
    """Return ``value`` if it fits in an unsigned 64-bit word, else raise Overflow."""
    if value < 0 or value > U64_MAX:
        raise Overflow(f"value {value} outside unsigned 64-bit range")
    return value
