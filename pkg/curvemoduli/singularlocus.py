"""
The subvariety X' of matrices that define singular sheaves.

A in X lies in X' iff q1 and q2 both vanish at the common zero of z1, z2,
i.e. iff f1 = q1(d0, d1, d2) and f2 = q2(d0, d1, d2) vanish, where d_i are
the minors of the coefficient matrix of (z1, z2).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from .exactalg import (
    Form,
    identity_rows,
    invert,
    matrix_rank,
    monomials,
    scalar_from_json,
    scalar_to_json,
    to_scalar,
)
from .exceptions import InvalidMatrix, MalformedInputError, NotInSingularLocus, NotNormalized
from .fibration import GroupElement, MatrixA, MatrixEntries, act
from .logger import logger
from .plane import minors

Vector3 = Tuple[Fraction, Fraction, Fraction]

X1 = Form.variable(1)
X2 = Form.variable(2)


class TangentVector(MatrixEntries):
    """A tangent vector B to X: same shape as A, no invariants beyond degrees."""

    __slots__ = ()

    @classmethod
    def zero(cls, d: int) -> "TangentVector":
        return cls(Form.zero(1), Form.zero(1), Form.zero(d - 1), Form.zero(d - 1), d)

    def __add__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(self.z1 + other.z1, self.z2 + other.z2, self.q1 + other.q1, self.q2 + other.q2, self.d)

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        return self + other.scale(-1)

    def scale(self, factor: Any) -> "TangentVector":
        c = to_scalar(factor)
        return TangentVector(self.z1.scale(c), self.z2.scale(c), self.q1.scale(c), self.q2.scale(c), self.d)

    def __rmul__(self, factor: Any) -> "TangentVector":
        return self.scale(factor)

    # Coefficients of x0 in the z-entries and of x0^(d-1) in the q-entries
    @property
    def xi0(self) -> Fraction:
        return self.z1.coefficient((1, 0, 0))

    @property
    def eta0(self) -> Fraction:
        return self.z2.coefficient((1, 0, 0))

    @property
    def xi00(self) -> Fraction:
        return self.q1.coefficient((self.d - 1, 0, 0))

    @property
    def eta00(self) -> Fraction:
        return self.q2.coefficient((self.d - 1, 0, 0))


@dataclass(frozen=True)
class SingularEquations:
    f1: Fraction
    f2: Fraction

    @property
    def vanish(self) -> bool:
        return not self.f1 and not self.f2

    def to_json(self) -> Dict[str, str]:
        return {"f1": scalar_to_json(self.f1), "f2": scalar_to_json(self.f2)}

    @classmethod
    def from_json(cls, raw: Any) -> "SingularEquations":
        try:
            return cls(scalar_from_json(raw["f1"]), scalar_from_json(raw["f2"]))
        except (KeyError, TypeError) as e:
            raise MalformedInputError("singular equations", str(e)) from e


def singular_equations(A: MatrixA) -> SingularEquations:
    point = minors(A.z1, A.z2)
    return SingularEquations(A.q1.evaluate(point), A.q2.evaluate(point))


def is_singular_sheaf(A: MatrixA) -> bool:
    return singular_equations(A).vanish


def check_singular(A: MatrixA) -> None:
    equations = singular_equations(A)
    if not equations.vanish:
        raise NotInSingularLocus((equations.f1, equations.f2))


def _cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector3:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _unit(i: int) -> Vector3:
    return (Fraction(int(i == 0)), Fraction(int(i == 1)), Fraction(int(i == 2)))


def jacobian(A: MatrixA) -> List[List[Fraction]]:
    """
    The 2 x (d^2+d+6) matrix of partial derivatives of (f1, f2) in the
    coordinates (a_i, b_i, A_ij, B_ij), by the chain rule through the minors.
    """
    check_singular(A)
    a, b = A.z1.coefficients(), A.z2.coefficients()
    dvec = minors(A.z1, A.z2)
    d_by_a = [_cross(_unit(i), b) for i in range(3)]
    d_by_b = [_cross(a, _unit(i)) for i in range(3)]
    values_at_d = [Form.monomial(m).evaluate(dvec) for m in monomials(A.d - 1)]
    zeros = [Fraction(0)] * len(values_at_d)

    rows = []
    for k, q in enumerate((A.q1, A.q2)):
        grad = [q.partial(i).evaluate(dvec) for i in range(3)]
        row = [sum((g * dd for g, dd in zip(grad, direction)), Fraction(0)) for direction in d_by_a + d_by_b]
        row += (values_at_d + zeros) if k == 0 else (zeros + values_at_d)
        rows.append(row)
    return rows


def tangent_contains(A: MatrixA, B: TangentVector) -> bool:
    if B.d != A.d:
        raise InvalidMatrix(f"tangent vector of degree {B.d} at a matrix of degree {A.d}")
    coords = B.coordinates()
    return all(sum((j * c for j, c in zip(row, coords)), Fraction(0)) == 0 for row in jacobian(A))


def jacobian_rank(A: MatrixA) -> int:
    return matrix_rank(jacobian(A))


def is_normalized(A: MatrixEntries) -> bool:
    return A.z1 == X1 and A.z2 == X2


def check_normalized(A: MatrixA) -> None:
    if not is_normalized(A):
        raise NotNormalized(A.z1, A.z2)


def chart_coefficients(A: MatrixA) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(A10, A01, B10, B01): coefficients of x0^(d-2)*x1 and x0^(d-2)*x2 in q1, q2."""
    top1, top2 = (A.d - 2, 1, 0), (A.d - 2, 0, 1)
    return (A.q1.coefficient(top1), A.q1.coefficient(top2), A.q2.coefficient(top1), A.q2.coefficient(top2))


def residue(A: MatrixA, B: TangentVector) -> Tuple[Fraction, Fraction]:
    """Defects of the two tangent equations of X' at a normalized A."""
    check_normalized(A)
    check_singular(A)
    a10, a01, b10, b01 = chart_coefficients(A)
    r1 = B.xi00 - a10 * B.xi0 - a01 * B.eta0
    r2 = B.eta00 - b10 * B.xi0 - b01 * B.eta0
    return r1, r2


class Normalization:
    """
    A change of coordinates T on P2 and a group element bringing A to the
    standard chart z1 = x1, z2 = x2, p = (1:0:0).
    """

    __slots__ = ("coord_change", "group_part", "result")

    def __init__(self, coord_change: Sequence[Sequence[Any]], group_part: GroupElement, result: MatrixA) -> None:
        self.coord_change: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(to_scalar(c) for c in row) for row in coord_change
        )
        self.group_part = group_part
        self.result = result

    @property
    def is_identity_change(self) -> bool:
        return self.coord_change == identity_rows(3)

    def transform(self, f: Form) -> Form:
        """Rewrite f in the new coordinates x' = T*x."""
        if self.is_identity_change:
            return f
        inverse = invert(self.coord_change)
        return f.substitute([Form.linear(row) for row in inverse])

    def transform_point(self, p: Sequence[Any]) -> Vector3:
        x = [to_scalar(c) for c in p]
        t = self.coord_change
        return (
            sum((t[0][j] * x[j] for j in range(3)), Fraction(0)),
            sum((t[1][j] * x[j] for j in range(3)), Fraction(0)),
            sum((t[2][j] * x[j] for j in range(3)), Fraction(0)),
        )

    def transport(self, B: TangentVector) -> TangentVector:
        """Push a tangent vector at A to a tangent vector at the normalized matrix."""
        (g11, g12), (g21, g22) = self.group_part.g
        z1 = B.z1.scale(g11) + B.z2.scale(g12)
        z2 = B.z1.scale(g21) + B.z2.scale(g22)
        q1 = B.q1.scale(g11) + B.q2.scale(g12)
        q2 = B.q1.scale(g21) + B.q2.scale(g22)
        return TangentVector(self.transform(z1), self.transform(z2), self.transform(q1), self.transform(q2), B.d)

    def to_json(self) -> Dict[str, Any]:
        return {
            "coord_change": [[scalar_to_json(c) for c in row] for row in self.coord_change],
            "group_part": self.group_part.to_json(),
            "result": self.result.to_json(),
        }

    @classmethod
    def from_json(cls, raw: Any) -> "Normalization":
        try:
            change = [[scalar_from_json(c) for c in row] for row in raw["coord_change"]]
            group_part = GroupElement.from_json(raw["group_part"])
            result = MatrixA.from_json(raw["result"])
        except (KeyError, TypeError) as e:
            raise MalformedInputError("normalization", str(e)) from e
        if len(change) != 3 or any(len(row) != 3 for row in change):
            raise MalformedInputError("normalization", "coord_change must be 3x3")
        return cls(change, group_part, result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Normalization):
            return NotImplemented
        return (self.coord_change, self.group_part, self.result) == (other.coord_change, other.group_part, other.result)

    def __hash__(self) -> int:
        return hash((self.coord_change, self.group_part, self.result))


def normalize(A: MatrixA) -> Normalization:
    d = A.d
    a, b = A.z1.coefficients(), A.z2.coefficients()
    if not a[0] and not b[0]:
        # span(z1, z2) = span(x1, x2): a group action suffices
        g = invert([[a[1], a[2]], [b[1], b[2]]])
        group_part = GroupElement(g, 1, 1, Form.zero(d - 2))
        logger.debug(f"Normalizing {A!r} by the group element g = {g}")
        return Normalization(identity_rows(3), group_part, act(group_part, A))

    c = A.point.pivot_index
    change = [list(_unit(c)), a, b]
    normalization = Normalization(change, GroupElement.identity(d), A)
    z1, z2 = (normalization.transform(z) for z in (A.z1, A.z2))
    q1, q2 = (normalization.transform(q) for q in (A.q1, A.q2))
    logger.debug(f"Normalizing {A!r} by the coordinate change {change}")
    normalization.result = MatrixA(z1, z2, q1, q2, d)
    return normalization
