"""Exception types shared across the package."""


class CoalieError(Exception):
    pass


class StructureError(CoalieError):
    """Malformed structure-constant data (index out of range, bad key order)."""


class RejectedInput(CoalieError):
    """An operation was called outside its precondition."""


class NotLocallyConilpotent(CoalieError):
    """The antipode of U(L) does not exist because delta is not locally conilpotent."""


class InconsistencyError(CoalieError):
    """An internal consistency check failed; usually verification was skipped."""


class CyclicBindingError(CoalieError):
    pass


class ValidationError(CoalieError):
    """Catalog parameters violate the entry's validity predicate."""

    def __init__(self, entry, failed):
        self.entry = entry
        self.failed = list(failed)
        super().__init__("%s: invalid parameters, violated %s" % (entry, "; ".join(self.failed)))


class ParseError(CoalieError):
    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = "%s: %s" % (location, message)
        super().__init__(message)
