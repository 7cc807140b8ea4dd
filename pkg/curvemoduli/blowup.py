"""
R-bundles on the surface D(p) = D0(p) + D1(p).

For A in X' (normalized so that p = (1:0:0)) and a tangent vector B, the matrix
Phi(A, B) presents a sheaf on D(p). It is an R-bundle (locally free on its
support) iff B is normal to X'; two R-bundles are equivalent iff their
tangent vectors define the same point of the projectivized normal space,
and then an explicit automorphism of D1(p) fixing L pulls one to the other.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .exactalg import BiForm, DElement, Form, matrix_rank, nullspace, scalar_from_json, scalar_to_json, to_scalar
from .exceptions import InvalidMatrix, MalformedInputError, TangentVectorNotNormal
from .fibration import MatrixA
from .logger import logger
from .plane import Point
from .singularlocus import TangentVector, check_normalized, check_singular, residue

Entries = Tuple[Tuple[DElement, DElement], Tuple[DElement, DElement]]
FormEntries = Tuple[Tuple[Form, Form], Tuple[Form, Form]]


class PhiMatrix:
    """The 2x2 matrix Phi(A, B) of sections on D(p)."""

    __slots__ = ("entries", "A", "B")

    def __init__(self, entries: Entries, A: Optional[MatrixA] = None, B: Optional[TangentVector] = None) -> None:
        self.entries = entries
        self.A = A
        self.B = B

    @property
    def d(self) -> int:
        return self.entries[0][1].bidegree[0] + 2

    def bidegrees(self) -> List[List[Tuple[int, int]]]:
        return [[e.bidegree for e in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhiMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        (a, b), (c, d) = self.entries
        return f"PhiMatrix([[{a}, {b}], [{c}, {d}]])"

    def to_json(self) -> Dict[str, Any]:
        provenance = {
            "A": self.A.to_json() if self.A is not None else None,
            "B": self.B.to_json() if self.B is not None else None,
        }
        return {"entries": [[e.to_json() for e in row] for row in self.entries], "provenance": provenance}

    @classmethod
    def from_json(cls, raw: Any) -> "PhiMatrix":
        try:
            rows = [[DElement.from_json(e) for e in row] for row in raw["entries"]]
            provenance = raw.get("provenance") or {}
        except (KeyError, TypeError, AttributeError) as e:
            raise MalformedInputError("phi matrix", str(e)) from e
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise MalformedInputError("phi matrix", "expected a 2x2 array")
        A = MatrixA.from_json(provenance["A"]) if provenance.get("A") else None
        B = TangentVector.from_json(provenance["B"]) if provenance.get("B") else None
        return cls(((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])), A, B)


class NormalDirection:
    """A point (r1 : r2) of the projectivized normal space P(N_A)."""

    __slots__ = ("r1", "r2")

    def __init__(self, r1: Any, r2: Any) -> None:
        a, b = to_scalar(r1), to_scalar(r2)
        if not a and not b:
            raise TangentVectorNotNormal()
        pivot = a if a else b
        self.r1 = a / pivot
        self.r2 = b / pivot

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalDirection):
            return NotImplemented
        return (self.r1, self.r2) == (other.r1, other.r2)

    def __hash__(self) -> int:
        return hash((self.r1, self.r2))

    def __repr__(self) -> str:
        return f"NormalDirection({self.r1}:{self.r2})"

    def to_json(self) -> List[str]:
        return [scalar_to_json(self.r1), scalar_to_json(self.r2)]

    @classmethod
    def from_json(cls, raw: Any) -> "NormalDirection":
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise MalformedInputError("normal direction", f"expected a pair, got {raw!r}")
        return cls(scalar_from_json(raw[0]), scalar_from_json(raw[1]))


class Automorphism:
    """(u0, u1, u2) -> (alpha*u0, u1 + beta*u0, u2 + gamma*u0), identical on L = {u0 = 0}."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha: Any, beta: Any = 0, gamma: Any = 0) -> None:
        self.alpha = to_scalar(alpha)
        self.beta = to_scalar(beta)
        self.gamma = to_scalar(gamma)
        if not self.alpha:
            raise InvalidMatrix("alpha must be nonzero")

    @classmethod
    def identity(cls) -> "Automorphism":
        return cls(1, 0, 0)

    def images(self) -> Tuple[BiForm, BiForm, BiForm]:
        u0, u1, u2 = (BiForm.u(j) for j in range(3))
        return (u0.scale(self.alpha), u1 + u0.scale(self.beta), u2 + u0.scale(self.gamma))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return (self.alpha, self.beta, self.gamma) == (other.alpha, other.beta, other.gamma)

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.gamma))

    def __repr__(self) -> str:
        return f"Automorphism(alpha={self.alpha}, beta={self.beta}, gamma={self.gamma})"

    def to_json(self) -> Dict[str, str]:
        return {
            "alpha": scalar_to_json(self.alpha),
            "beta": scalar_to_json(self.beta),
            "gamma": scalar_to_json(self.gamma),
        }

    @classmethod
    def from_json(cls, raw: Any) -> "Automorphism":
        try:
            return cls(*(scalar_from_json(raw[key]) for key in ("alpha", "beta", "gamma")))
        except (KeyError, TypeError) as e:
            raise MalformedInputError("automorphism", str(e)) from e


def _split_at_p(q: Form) -> Tuple[Form, Form]:
    """q = x1*P1 + x2*P2, monomials containing x1 going to P1."""
    p1: Dict[Tuple[int, ...], Fraction] = {}
    p2: Dict[Tuple[int, ...], Fraction] = {}
    for (e0, e1, e2), c in q.terms.items():
        if e1:
            p1[(e0, e1 - 1, e2)] = c
        elif e2:
            p2[(e0, e1, e2 - 1)] = c
        else:
            raise InvalidMatrix(f"{q} does not vanish at (1:0:0)")
    return Form(q.degree - 1, p1), Form(q.degree - 1, p2)


def phi(A: MatrixA, B: TangentVector) -> PhiMatrix:
    check_normalized(A)
    check_singular(A)
    if B.d != A.d:
        raise InvalidMatrix(f"tangent vector of degree {B.d} at a matrix of degree {A.d}")
    u0, u1, u2 = (BiForm.u(j) for j in range(3))
    x0_power = BiForm.from_form(Form.monomial((A.d - 2, 0, 0)))

    def second_column(q: Form, top: Fraction) -> DElement:
        p1, p2 = _split_at_p(q)
        return DElement(u1 * BiForm.from_form(p1) + u2 * BiForm.from_form(p2) + (x0_power * u0).scale(top))

    entries: Entries = (
        (DElement(u1 + u0.scale(B.xi0)), second_column(A.q1, B.xi00)),
        (DElement(u2 + u0.scale(B.eta0)), second_column(A.q2, B.eta00)),
    )
    return PhiMatrix(entries, A, B)


def restrict_to_D0(matrix: PhiMatrix) -> FormEntries:
    """Entries pulled back along u = (0 : x1 : x2); recovers A."""
    (a, b), (c, d) = matrix.entries
    return ((a.restrict_to_D0(), b.restrict_to_D0()), (c.restrict_to_D0(), d.restrict_to_D0()))


def restrict_to_D1(matrix: PhiMatrix) -> List[List[Fraction]]:
    """
    Coefficient rows in (u0, u1, u2) of the entries (1,1), (2,1), (1,2), (2,2)
    at x = (1:0:0), up to the common factor x0^(d-2) of the second column.
    """
    (a, b), (c, d) = matrix.entries
    return [entry.restrict_to_D1().coefficients() for entry in (a, c, b, d)]


def common_zero_on_D1(matrix: PhiMatrix) -> Optional[Point]:
    """A point u of D1(p) where every entry vanishes, if there is one."""
    rows = restrict_to_D1(matrix)
    kernel = nullspace(rows, 3)
    return Point(kernel[0]) if kernel else None


def is_r_bundle(A: MatrixA, B: TangentVector) -> bool:
    return matrix_rank(restrict_to_D1(phi(A, B))) == 3


def support_curve(matrix: PhiMatrix) -> DElement:
    (a, b), (c, d) = matrix.entries
    return a * d - b * c


def normal_direction(A: MatrixA, B: TangentVector) -> NormalDirection:
    r1, r2 = residue(A, B)
    return NormalDirection(r1, r2)


def apply_automorphism(aut: Automorphism, matrix: PhiMatrix) -> PhiMatrix:
    images = aut.images()
    (a, b), (c, d) = matrix.entries
    entries: Entries = (
        (a.substitute_u(images), b.substitute_u(images)),
        (c.substitute_u(images), d.substitute_u(images)),
    )
    return PhiMatrix(entries, matrix.A)


def verify_equivalence(A: MatrixA, B1: TangentVector, B2: TangentVector, aut: Automorphism) -> bool:
    """Entry-exact check of phi*(Phi(A, B1)) = Phi(A, B2)."""
    return apply_automorphism(aut, phi(A, B1)) == phi(A, B2)


def r_bundle_equivalent(A: MatrixA, B1: TangentVector, B2: TangentVector) -> Optional[Automorphism]:
    first, second = residue(A, B1), residue(A, B2)
    if not any(first) or not any(second):
        raise TangentVectorNotNormal()
    i = 0 if first[0] else 1
    alpha = second[i] / first[i]
    if not alpha or (second[0], second[1]) != (alpha * first[0], alpha * first[1]):
        return None
    aut = Automorphism(alpha, B2.xi0 - B1.xi0 * alpha, B2.eta0 - B1.eta0 * alpha)
    if not verify_equivalence(A, B1, B2, aut):
        logger.error(f"Constructed {aut!r} does not pull Phi(A, B1) back to Phi(A, B2)")
        return None
    logger.debug(f"R-bundles are equivalent via {aut!r}")
    return aut
