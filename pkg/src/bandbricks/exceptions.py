"""Exception hierarchy for bandbricks.

Every error raised on malformed input derives from ``BandBricksError`` (itself a
``ValueError``), so callers and the CLI can catch one type.
"""


class BandBricksError(ValueError):
    pass


class PresentationError(BandBricksError):
    """Malformed presentation text or structurally invalid presentation."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SignError(BandBricksError):
    """The sign constraints have no solution, or supplied signs are inconsistent."""

    def __init__(self, message, cycle=()):
        self.cycle = tuple(cycle)
        super().__init__(message)


class StringError(BandBricksError):
    """A syllable sequence is not a string; ``index`` is 1-based, rightmost-first."""

    def __init__(self, message, index=None, reason=None):
        self.index = index
        self.reason = reason
        super().__init__(message)


class BandError(BandBricksError):
    """A string fails one of the band axioms, named by ``axiom``."""

    def __init__(self, message, axiom):
        self.axiom = axiom
        super().__init__(message)


class NotAcyclicError(BandBricksError):
    pass


class NotGentleError(BandBricksError):
    pass


class TracedPosetError(BandBricksError):
    def __init__(self, message, violations=()):
        self.violations = tuple(violations)
        super().__init__(message)


class CrownError(BandBricksError):
    pass
