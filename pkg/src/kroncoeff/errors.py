class InputError(ValueError):
    """Bad user-supplied arguments (sizes, ranges, malformed partitions)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
