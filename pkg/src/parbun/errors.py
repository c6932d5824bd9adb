"""Exception types shared by every module.

Input problems raise :class:`InputError` (a ``ValueError``); failures of an
identity that must hold by construction raise :class:`ConsistencyError`.
The CLI maps the first to exit code 2 and the second to exit code 1.
"""


class InputError(ValueError):
    """Malformed or out-of-contract input data."""


class ConsistencyError(RuntimeError):
    """An internal identity was violated; indicates a bug, not bad input."""
