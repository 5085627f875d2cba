'''
Exceptions and their subclasses.

Everything arfkit raises on purpose derives from ArfkitException, so the
command line front end can tell input problems apart from bugs.
'''


class ArfkitException(Exception):
    pass


class InvalidFormError(ArfkitException):
    """
    Malformed algebraic input: wrong shape, asymmetric matrix, entries out
    of range or a broken diagonal constraint.
    """
    pass


class DegenerateFormError(InvalidFormError):
    pass


class NotUnimodularError(InvalidFormError):
    pass


class DimensionError(ArfkitException):
    pass


class EnumerationCapError(DimensionError):
    """
    Raised when an exhaustive enumeration would exceed settings.ENUM_CAP.
    """
    def __init__(self, dim, cap):
        super(EnumerationCapError, self).__init__(
            "Dimension {} exceeds the enumeration cap {}; "
            "raise ARFKIT_ENUM_CAP to allow it.".format(dim, cap))
        self.dim = dim
        self.cap = cap


class NoSolution(ArfkitException):
    pass


class InconsistentDataError(ArfkitException):
    pass


class DivisibilityError(InconsistentDataError):
    """
    A van der Blij divisibility precondition failed: the data cannot come
    from an actual manifold, which is different from a congruence failing.
    """
    pass


class InternalError(ArfkitException):
    pass


class DocumentError(ArfkitException):
    """
    Problem with an input document.

    It is subclassed by DocumentSyntaxError, UnknownKindError and
    DocumentInvariantError so that the CLI can word its diagnostics.
    Otherwise, the contents are essentially the same.
    """
    def __init__(self, message, field=None, line=None, column=None):
        super(DocumentError, self).__init__(message)
        self.field = field
        self.line = line
        self.column = column


class DocumentSyntaxError(DocumentError):
    pass


class UnknownKindError(DocumentError):
    pass


class DocumentInvariantError(DocumentError):
    pass
