"""Exception types shared across the package.

The two "internal assertion" errors (OracleDisagreement, BoundExceeded) signal
bugs, not bad input: each corresponds to a mathematical identity that must hold
for every valid input, so the CLI maps them to a distinct exit code.
"""


class NsrigError(Exception):
    """Base class for all package errors."""


class EmptyGenerators(NsrigError):
    pass


class NonPositiveGenerator(NsrigError):
    pass


class NonCofinite(NsrigError):
    """gcd of the generators is not 1, so the complement would be infinite."""


class BadAperyModulus(NsrigError):
    pass


class EmptyIdeal(NsrigError):
    pass


class AmbientMismatch(NsrigError):
    pass


class NotASubmodule(NsrigError):
    pass


class NotProperIdeal(NsrigError):
    pass


class NotGorensteinAmbient(NsrigError):
    pass


class NotTwoGenerated(NsrigError):
    pass


class ElementNotInIdeal(NsrigError):
    pass


class OracleDisagreement(NsrigError):
    """The length oracle and the torsion oracle returned different verdicts."""


class BoundExceeded(NsrigError):
    """Torsion appeared in a degree range where the stabilization argument
    proves there can be none."""


class ResourceGuard(NsrigError):
    pass
