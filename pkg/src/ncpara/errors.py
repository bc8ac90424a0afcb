class NCParaError(Exception):
    """Base class for all errors raised by ncpara."""


class EmptyInputError(NCParaError, ValueError):
    pass


class ParseError(NCParaError, ValueError):
    """Malformed input line. Carries the source name and 1-based line number."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = []
        if source is not None:
            where.append(str(source))
        if line is not None:
            where.append("line {}".format(line))
        prefix = ":".join(where)
        super().__init__("{}: {}".format(prefix, message) if prefix else message)


class DuplicateCompoundError(NCParaError, ValueError):
    def __init__(self, compound, line=None, source=None):
        self.compound = compound
        self.line = line
        self.source = source
        msg = "duplicate compound in submission: {}".format(compound)
        if line is not None:
            msg = "line {}: {}".format(line, msg)
        if source is not None:
            msg = "{}:{}".format(source, msg)
        super().__init__(msg)
