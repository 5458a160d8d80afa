"""Exception types shared across the package.

Everything derives from CopaError (a ValueError) so callers can catch the
whole family, while validation sites raise the most specific class.
"""


class CopaError(ValueError):
    """Base class for domain validation failures."""


class InvalidPartitionError(CopaError):
    """A part sequence is not a valid partition for the requested use."""


class ResidueError(CopaError):
    """A part falls outside the required residue class."""


class MinimumPartError(CopaError):
    """A part is smaller than the minimum its component allows."""


class ZeroPartError(CopaError):
    """A zero part appears where the parameters forbid zero parts."""


class EmptySkyError(CopaError):
    """The sky is empty although the parameters require it to be nonempty."""


class EmptyGroundError(CopaError):
    """The ground is empty although the parameters require it to be nonempty."""


class SplitError(CopaError):
    """An enlarged-sky part is too small for the claimed ground count."""


class NoClosedFormError(CopaError):
    """No closed-form count is implemented for the requested parameters."""


class NotEOStarError(CopaError):
    """A partition fails the even-odd structure required here."""
