"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: bad arguments exit 2, capability
overflows exit 3, internal invariant failures (a differential that does not
square to zero, a non-integer dimension) exit 4.
"""


class PropkitError(Exception):
    pass


class ArgumentError(PropkitError):
    """Malformed or inconsistent arguments (usage error)."""


class CapabilityError(PropkitError):
    """Instance exceeds a documented capability bound of the engine."""


class WindowError(CapabilityError):
    """Query outside the declared window of a dimension table."""


class InvariantError(PropkitError):
    """An internal exact invariant failed (e.g. d ∘ d != 0)."""
