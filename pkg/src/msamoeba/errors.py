"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can put it
in the JSON error document without string matching.
"""


class MsAmoebaError(Exception):
    code = "Error"


class ParseError(MsAmoebaError, ValueError):
    code = "ParseError"


class LengthMismatch(MsAmoebaError, ValueError):
    code = "LengthMismatch"


class BadRange(MsAmoebaError, ValueError):
    code = "BadRange"


class ZeroPolynomial(MsAmoebaError, ValueError):
    code = "ZeroPolynomial"


class NotRealRooted(MsAmoebaError, ValueError):
    code = "NotRealRooted"


class DegreeTooLow(MsAmoebaError, ValueError):
    code = "DegreeTooLow"


class Unsupported(MsAmoebaError, ValueError):
    code = "Unsupported"


class EmptyPolynomial(MsAmoebaError, ValueError):
    code = "EmptyPolynomial"


class NegativeEntry(MsAmoebaError, ValueError):
    code = "NegativeEntry"


class NonPositiveEntry(MsAmoebaError, ValueError):
    code = "NonPositiveEntry"


class ZeroCoordinate(MsAmoebaError, ValueError):
    code = "ZeroCoordinate"


class BadTolerances(MsAmoebaError, ValueError):
    code = "BadTolerances"


class DegenerateSample(MsAmoebaError, RuntimeError):
    code = "DegenerateSample"


class BadIndex(MsAmoebaError, ValueError):
    code = "BadIndex"


class SignPrecondition(MsAmoebaError, ValueError):
    code = "SignPrecondition"


class NotSI(MsAmoebaError, ValueError):
    code = "NotSI"


class PathBroken(MsAmoebaError, RuntimeError):
    code = "PathBroken"

    def __init__(self, message, tau=None):
        super().__init__(message)
        self.tau = tau


class LambdaTooSmall(MsAmoebaError, ValueError):
    code = "LambdaTooSmall"

    def __init__(self, message, pattern=None):
        super().__init__(message)
        self.pattern = pattern
