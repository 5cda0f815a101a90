"""Exception hierarchy shared by all modules."""


class LinresError(ValueError):
    """Base class for all errors raised by this package."""


class AmbientMismatchError(LinresError):
    """Monomials or ideals living in different numbers of variables were combined."""


class NotPrimaryError(LinresError):
    pass


class NotEquigeneratedError(LinresError):
    pass


class NotSquareFreeError(LinresError):
    pass


class BudgetError(LinresError):
    """A configured size cap was exceeded; no partial answer is returned."""


class FieldError(LinresError):
    pass


class CertificateError(LinresError):
    """A shadow system (or other certificate) violates its invariants."""


class PreconditionError(LinresError):
    pass


class ParseError(LinresError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
