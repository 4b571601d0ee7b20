class QLError(Exception):
    pass


class DimensionError(QLError, ValueError):
    """Raised when array shapes don't chain (input width, layer widths, output channels)."""
    pass


class ConfigError(QLError, ValueError):
    """Invalid configuration.  The CLI maps this to exit code 2."""
    pass


class EmptyDatasetError(QLError, ValueError):
    pass


class OracleError(QLError):
    """
    Raised when the convex machinery fails (eigensolver non-convergence, least squares failure).

    `diagnostics` carries whatever the failing routine knew at the time (matrix size, LAPACK info, etc.)
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics if diagnostics is not None else {}


class DataFormatError(QLError, ValueError):
    pass


class DivergedCellsError(QLError):
    """Raised (in strict mode only) after a sweep finishes with at least one diverged trial."""

    def __init__(self, message, cells=None):
        super().__init__(message)
        self.cells = cells if cells is not None else []
