"""Exceptions raised by scckit.

Every failure the toolkit reports derives from :class:`ScckitError`.
Each class carries the error ``code`` used throughout the
documentation and the ``exit_status`` the command line tool exits
with when the error reaches it.

"""


class ScckitError(Exception):
    """Base class for all scckit errors.

    Attributes:

    :code: Short error vocabulary name, e.g. ``PARSE_ERROR``.
    :exit_status: Process exit status used by the command line tool.

    """
    code = 'ERROR'
    exit_status = 1


class ParseError(ScckitError):
    """Malformed input text (edge lists, component listings).

    :param lineno: 1-based line number of the offending line, or
       None when the problem is not tied to a line (e.g. missing
       arc lines at the end of the input).

    """
    code = 'PARSE_ERROR'
    exit_status = 1

    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = 'line {}: {}'.format(lineno, msg)
        super().__init__(msg)
        self.lineno = lineno


class OutOfRangeError(ScckitError):
    """A vertex or arc id outside its valid range."""
    code = 'OUT_OF_RANGE'
    exit_status = 2

    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = 'line {}: {}'.format(lineno, msg)
        super().__init__(msg)
        self.lineno = lineno


class InvalidGraphError(ScckitError):
    """Graph data violating the representation invariants."""
    code = 'INVALID_GRAPH'
    exit_status = 2


class InternalInvariantError(ScckitError):
    """An implementation defect was detected at run time.

    Never caused by valid or invalid input alone, e.g. popping an
    empty exploration stack or the guard vertex of a follower stack.

    """
    code = 'INTERNAL_INVARIANT'
    exit_status = 4


class UnknownTagError(ScckitError, KeyError):
    """No cost model is known for the given tag."""
    code = 'UNKNOWN_TAG'
    exit_status = 1

    def __str__(self):
        return Exception.__str__(self)


class TooLargeError(ScckitError):
    """Input exceeds a configured size limit."""
    code = 'TOO_LARGE'
    exit_status = 1


class BadSpecError(ScckitError, ValueError):
    """A graph generator specification cannot be satisfied."""
    code = 'BAD_SPEC'
    exit_status = 1


class InvalidPartitionError(ScckitError):
    """A claimed component list does not partition the vertices."""
    code = 'INVALID_PARTITION'
    exit_status = 3


class UnsupportedError(ScckitError):
    """A valid but unsupported combination of options."""
    code = 'UNSUPPORTED'
    exit_status = 1


class SettingsError(ScckitError):
    """The configuration file could not be loaded or validated."""
    code = 'BAD_CONFIG'
    exit_status = 1


class UsageError(ScckitError):
    """Bad command line usage, e.g. an unreadable input file."""
    code = 'USAGE'
    exit_status = 1
