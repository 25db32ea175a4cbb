"""Exception hierarchy shared by all modules.

``DomainError`` and its subclasses signal a violated mathematical
precondition (exit status 1 on the command line); ``SchemaError`` signals
malformed input data (exit status 2).
"""


class DomainError(Exception):
    pass


class OrderMismatch(DomainError):
    pass


class FieldExtensionRequired(DomainError):
    """A root needed by a construction does not exist in the coefficient field."""

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class NonSplitForm(FieldExtensionRequired):
    pass


class DegenerateForm(DomainError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotInvariant(DomainError):
    def __init__(self, message, generator=None, vector=None):
        super().__init__(message)
        self.generator = generator
        self.vector = vector


class ChainError(DomainError):
    pass


class TableError(DomainError):
    pass


class ConsistencyError(DomainError):
    """An internal cross-check failed; indicates a bug, never bad input."""


class SchemaError(ValueError):
    def __init__(self, message, field=None):
        super().__init__(message if field is None else "%s: %s" % (field, message))
        self.field = field


class FormMismatch(DomainError):
    pass
