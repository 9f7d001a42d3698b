"""Exception types shared across the package."""


class NakalabError(Exception):
    pass


class ParseError(NakalabError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if line is not None:
            where = f"{source or '<input>'}:{line}:{column or 1}: "
        super().__init__(where + message)


class InvalidAlgebra(NakalabError):
    pass


class InvalidModule(NakalabError):
    pass


class RepresentationInfinite(NakalabError):
    """The algebra has infinitely many indecomposables; ``witness`` names why."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class UnsupportedAlgebra(NakalabError):
    """Neither the string nor the hereditary backend applies."""


class NotTwoNakayama(NakalabError):
    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics
        super().__init__(message)


class BudgetExceeded(NakalabError):
    pass
