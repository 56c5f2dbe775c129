"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the CLI exit
status it maps to.
"""


class FiberscopeError(Exception):
    code = "error"
    exit_status = 1


class ParseError(FiberscopeError, ValueError):
    code = "syntax_error"
    exit_status = 3


class ZeroClassError(FiberscopeError, ValueError):
    code = "zero_class"
    exit_status = 4


class DegeneracyError(FiberscopeError, ValueError):
    """Raised for degenerate geometric input: zero polynomials, Newton
    polytopes of dimension < 2, single-vertex paths."""

    code = "degenerate"
    exit_status = 5


class InvalidSurfaceTypeError(FiberscopeError, ValueError):
    code = "invalid_surface_type"
    exit_status = 6


class NotPrimitiveError(FiberscopeError, ValueError):
    code = "not_primitive"
    exit_status = 7


class NotFiberedError(FiberscopeError, ValueError):
    code = "class_does_not_fiber"
    exit_status = 8


class InconsistentDataError(FiberscopeError, ValueError):
    code = "inconsistent_data"
    exit_status = 9


class DataFileError(FiberscopeError, OSError):
    code = "data_file_error"
    exit_status = 10


class NonFiberedSectorError(FiberscopeError):
    """A whole open cone of classes fails the criterion, so the failures
    are not contained in finitely many lines."""

    code = "nonfibered_sector"
    exit_status = 11


EXIT_CODES = {
    cls.code: cls.exit_status
    for cls in (
        ParseError,
        ZeroClassError,
        DegeneracyError,
        InvalidSurfaceTypeError,
        NotPrimitiveError,
        NotFiberedError,
        InconsistentDataError,
        DataFileError,
        NonFiberedSectorError,
    )
}
