"""Exception hierarchy shared by every cxvec module."""


class CxvecError(Exception):
    """Base class for all library errors."""


class DimensionError(CxvecError, ValueError):
    """Operand dimensions or shapes are incompatible."""


class BackendMismatch(CxvecError, TypeError):
    """Exact and floating scalars were mixed in one operation."""


class FloatingOnly(CxvecError, TypeError):
    """Operation needs sqrt/cos/acos and is undefined on the exact backend."""


class NotReal(CxvecError, ValueError):
    """A complex value expected to be real has a significant imaginary part."""

    def __init__(self, imag_residual, tol):
        self.residual = imag_residual
        self.tol = tol
        super().__init__(f"imaginary part {imag_residual!r} exceeds tolerance {tol!r}")


class UsageError(CxvecError, ValueError):
    """A precondition on the arguments does not hold."""


class ConstraintViolation(UsageError):
    """Input waves or interfaces violate a validity constraint."""

    def __init__(self, clause, message):
        self.clause = clause
        super().__init__(f"{clause}: {message}")


class Unsupported(CxvecError):
    """Physically meaningful input outside the supported model (TIR, non-TE)."""


class DegenerateIncidence(Unsupported):
    """Grazing incidence: the incident wavevector lies in the interface plane."""
