from typing import Any, Sequence


class CurveModuliError(Exception):
    """Base class for every error raised by curvemoduli."""


class MalformedInputError(CurveModuliError):
    """Raised when JSON or textual input cannot be decoded."""

    def __init__(self, what: str, detail: str) -> None:
        super().__init__(f"Malformed {what}: {detail}")
        self.what = what
        self.detail = detail


class PreconditionError(CurveModuliError):
    """Raised when a value violates a mathematical precondition."""


class HomogeneityError(PreconditionError):
    """Raised when forms of different degree are combined additively."""

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"Cannot add forms of degree {left} and {right}")
        self.left = left
        self.right = right


class DependentLinearForms(PreconditionError):
    """Raised when two linear forms do not cut out a single point."""

    def __init__(self, z1: Any, z2: Any) -> None:
        super().__init__(f"Linear forms {z1} and {z2} are linearly dependent")
        self.z1 = z1
        self.z2 = z2


class PointNotOnCurve(PreconditionError):
    """Raised when a point is expected to lie on a curve but does not."""

    def __init__(self, curve: Any, point: Any, value: Any) -> None:
        super().__init__(f"Point {point} is not on {curve} (value {value})")
        self.curve = curve
        self.point = point
        self.value = value


class DegreeTooSmall(PreconditionError):
    """Raised for curve degrees below 3."""

    def __init__(self, degree: int, minimum: int = 3) -> None:
        super().__init__(f"Degree {degree} is below the minimum {minimum}")
        self.degree = degree
        self.minimum = minimum


class InvalidMatrix(PreconditionError):
    """Raised when a matrix or group element violates its invariants."""

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class NotInSingularLocus(PreconditionError):
    """Raised when an operation needs A in X' but q1, q2 do not both vanish at p."""

    def __init__(self, values: Sequence[Any]) -> None:
        shown = ", ".join(str(v) for v in values)
        super().__init__(f"Matrix is not in the singular locus (f1, f2 = {shown})")
        self.values = tuple(values)


class NotNormalized(PreconditionError):
    """Raised when a matrix is not in the standard chart z1 = x1, z2 = x2."""

    def __init__(self, z1: Any, z2: Any) -> None:
        super().__init__(f"Matrix is not normalized: z1 = {z1}, z2 = {z2}")
        self.z1 = z1
        self.z2 = z2


class TangentVectorNotNormal(PreconditionError):
    """Raised when a tangent vector lies in the tangent space of X'."""

    def __init__(self) -> None:
        super().__init__("Tangent vector is tangent to X' (zero residue)")


class DomainViolation(PreconditionError):
    """Raised when integer arguments fall outside their admissible range."""

    def __init__(self, name: str, value: Any, constraint: str) -> None:
        super().__init__(f"{name} = {value} violates {constraint}")
        self.name = name
        self.value = value
        self.constraint = constraint
