"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: InputError means the request itself was
malformed (exit 2), PreconditionError means the mathematics refused the
request (exit 1).
"""


class RamjacError(Exception):
    """Base class for all errors raised deliberately by this package."""


class InputError(RamjacError):
    """Malformed input: expression syntax, bad document schema, bad flags."""


class PreconditionError(RamjacError):
    """A mathematical precondition failed (zero valuation, non-Eisenstein
    polynomial, point off the special fiber, improper ideal, ...)."""
