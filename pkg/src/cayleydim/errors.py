"""Exception hierarchy shared by the package."""


class CayleyDimError(Exception):
    """Base class for every error raised by cayleydim."""


class ParseError(CayleyDimError, ValueError):
    """A group, element, set, family or graph literal could not be parsed."""


class GroupMismatchError(CayleyDimError, ValueError):
    """Elements from groups with different factor shapes were combined."""


class OrderLimitError(CayleyDimError, ValueError):
    """A group or graph exceeds the configured desk-scale limit."""


class ConnectionSetError(CayleyDimError, ValueError):
    """A connection set violates the Cayley graph preconditions."""


class IdentityInConnectionSetError(ConnectionSetError):
    pass


class NotInverseClosedError(ConnectionSetError):
    pass


class DisconnectedGraphError(CayleyDimError, ValueError):
    """Metric quantities were requested on a disconnected graph."""


class UnreachableError(CayleyDimError, ValueError):
    """Two vertices lie in different components."""
