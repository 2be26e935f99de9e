"""Exception types shared across the package."""


class QChromError(Exception):
    """Base class for all qchrom errors."""


class GraphParseError(QChromError):
    """Malformed graph6 string or edge list."""


class GeneratorError(QChromError):
    """Unknown generator id or parameters out of range."""


class DimensionError(QChromError):
    """Operands have incompatible shapes or orders."""


class NumericsError(QChromError):
    """The eigensolver failed to converge; no partial results are returned."""


class FamilyValidationError(QChromError):
    """A projector family violates hermiticity, idempotency, or resolution of identity."""


class CertificateFormatError(QChromError):
    """Certificate file does not match the JSON certificate schema."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{message} (at {path})" if path else message)


class CertificateStructureError(QChromError):
    """Certificate is structurally incompatible with the graph (not a verdict)."""


class MatrixFormatError(QChromError):
    """JSON matrix payload is malformed (ragged rows, non-finite, bad complex pairs)."""


class UnverifiedCertificateError(QChromError):
    """Operation requires a certificate that passed verification."""


class ExtractionError(QChromError):
    """Projector family cannot be decomposed into a vertex-indexed certificate."""


class ImproperColoringError(QChromError):
    """Coloring assigns the same color to both endpoints of an edge."""


class SizeLimitError(QChromError):
    """Input exceeds the supported size envelope."""
