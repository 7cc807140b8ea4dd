from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from .exactalg import Form, scalar_from_json, scalar_to_json, to_scalar
from .exceptions import DegreeTooSmall, DependentLinearForms, MalformedInputError, PointNotOnCurve

MIN_DEGREE = 3


class Point:
    """A point of P2, scaled so that its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[Any]) -> None:
        values = [to_scalar(c) for c in coords]
        if len(values) != 3:
            raise MalformedInputError("point", f"expected 3 coordinates, got {len(values)}")
        pivot = next((c for c in values if c), None)
        if pivot is None:
            raise MalformedInputError("point", "all coordinates are zero")
        self.coords: Tuple[Fraction, Fraction, Fraction] = (
            values[0] / pivot,
            values[1] / pivot,
            values[2] / pivot,
        )

    @property
    def pivot_index(self) -> int:
        """Index of the first nonzero coordinate."""
        return next(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Point{self}"

    def to_json(self) -> List[str]:
        return [scalar_to_json(c) for c in self.coords]

    @classmethod
    def from_json(cls, raw: Any) -> "Point":
        if not isinstance(raw, (list, tuple)):
            raise MalformedInputError("point", f"expected a list, got {raw!r}")
        return cls([scalar_from_json(c) for c in raw])


class Curve:
    """A plane curve of degree >= 3, identified with its monic equation."""

    __slots__ = ("f",)

    def __init__(self, f: Form) -> None:
        if f.degree < MIN_DEGREE:
            raise DegreeTooSmall(f.degree, MIN_DEGREE)
        if f.is_zero():
            raise MalformedInputError("curve", "the zero form defines no curve")
        self.f: Form = f.monic()

    @property
    def degree(self) -> int:
        return self.f.degree

    def contains(self, p: Point) -> bool:
        return self.f.evaluate(p.coords) == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Curve):
            return NotImplemented
        return self.f == other.f

    def __hash__(self) -> int:
        return hash(self.f)

    def __str__(self) -> str:
        return f"<{self.f}>"

    def __repr__(self) -> str:
        return f"Curve({self.f})"

    def to_json(self) -> Any:
        return self.f.to_json()

    @classmethod
    def from_json(cls, raw: Any) -> "Curve":
        return cls(Form.from_json(raw))


class CurvePointPair:
    """A point (C, p) of the universal curve M."""

    __slots__ = ("curve", "point")

    def __init__(self, curve: Curve, point: Point) -> None:
        value = curve.f.evaluate(point.coords)
        if value:
            raise PointNotOnCurve(curve, point, value)
        self.curve = curve
        self.point = point

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CurvePointPair):
            return NotImplemented
        return self.curve == other.curve and self.point == other.point

    def __hash__(self) -> int:
        return hash((self.curve, self.point))

    def __repr__(self) -> str:
        return f"CurvePointPair({self.curve}, {self.point})"

    def to_json(self) -> Any:
        return {"curve": self.curve.to_json(), "point": self.point.to_json()}

    @classmethod
    def from_json(cls, raw: Any) -> "CurvePointPair":
        if not isinstance(raw, dict) or "curve" not in raw or "point" not in raw:
            raise MalformedInputError("pair", "expected an object with 'curve' and 'point'")
        return cls(Curve.from_json(raw["curve"]), Point.from_json(raw["point"]))


def minors(z1: Form, z2: Form) -> Tuple[Fraction, Fraction, Fraction]:
    """Signed 2x2 minors (d0, d1, d2) of the coefficient matrix of z1, z2."""
    if z1.degree != 1 or z2.degree != 1:
        raise MalformedInputError("linear form", f"degrees {z1.degree}, {z2.degree}")
    a0, a1, a2 = z1.coefficients()
    b0, b1, b2 = z2.coefficients()
    return (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)


def common_zero(z1: Form, z2: Form) -> Point:
    """The point cut out by two independent linear forms."""
    values = minors(z1, z2)
    if not any(values):
        raise DependentLinearForms(z1, z2)
    return Point(values)


def gradient(curve: Curve, p: Point) -> Tuple[Fraction, Fraction, Fraction]:
    d0, d1, d2 = (curve.f.partial(i).evaluate(p.coords) for i in range(3))
    return (d0, d1, d2)


def is_singular_point(curve: Curve, p: Point) -> bool:
    value = curve.f.evaluate(p.coords)
    if value:
        raise PointNotOnCurve(curve, p, value)
    return not any(gradient(curve, p))


def make_pair(f: Form, p: Sequence[Any]) -> CurvePointPair:
    point = p if isinstance(p, Point) else Point(p)
    return CurvePointPair(Curve(f), point)
