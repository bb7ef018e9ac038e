"""Exception hierarchy shared by every module."""


class ArithSiteError(Exception):
    """Base class for all errors raised by arithsite."""


class InvalidInput(ArithSiteError, ValueError):
    pass


class EmptyPremise(ArithSiteError, ValueError):
    """An operation that needs a nonempty sieve was handed the empty one."""


class UndefinedGcd(EmptyPremise):
    pass


class InvalidFrameElement(ArithSiteError, ValueError):
    pass


class InconsistentSpec(ArithSiteError, ValueError):
    pass


class ResourceLimit(ArithSiteError):
    """Raised when an exact procedure would exceed its configured budget."""


class ArithmeticOverflow(ArithSiteError, OverflowError):
    pass
