"""Exception hierarchy shared by every module.

Each family maps onto one CLI exit status: data problems exit 3, domain
problems (unsupported parameters, catastrophic codes, out-of-range values)
exit 4. Argument errors are handled by argparse and exit 2.
"""


class ConvodnaError(Exception):
    exit_code = 1


class DataError(ConvodnaError, ValueError):
    exit_code = 3


class DomainError(ConvodnaError, ValueError):
    exit_code = 4


class ParseError(DataError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LengthError(DataError):
    pass


class ShapeError(DataError):
    pass


class InvalidWalkError(DataError):
    pass


class MissingDataError(DataError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidCodeError(DomainError):
    pass


class UnsupportedError(DomainError):
    pass


class CatastrophicCodeError(DomainError):
    pass
