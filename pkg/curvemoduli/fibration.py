"""
The parameter space X of matrices A = (z1 q1; z2 q2), the quotient map
nu: X -> M, the action of G = GL2 x Aut(O(-d+2) + O) and the numerical
invariants of the sheaves that X parameterizes.
"""

from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from .exactalg import (
    Form,
    determinant,
    invert,
    monomials,
    nullspace,
    scalar_from_json,
    scalar_to_json,
    solve_linear,
    to_scalar,
)
from .exceptions import DegreeTooSmall, DomainViolation, InvalidMatrix, MalformedInputError
from .logger import logger
from .plane import MIN_DEGREE, Curve, CurvePointPair, Point, common_zero

Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def check_degree(d: int) -> None:
    if d < MIN_DEGREE:
        raise DegreeTooSmall(d, MIN_DEGREE)


class MatrixEntries:
    """Coefficient shape shared by points of X and tangent vectors to X."""

    __slots__ = ("d", "z1", "z2", "q1", "q2")

    def __init__(self, z1: Form, z2: Form, q1: Form, q2: Form, d: Optional[int] = None) -> None:
        d = q1.degree + 1 if d is None else d
        check_degree(d)
        if z1.degree != 1 or z2.degree != 1:
            raise InvalidMatrix(f"z-entries must be linear, got degrees {z1.degree}, {z2.degree}")
        if q1.degree != d - 1 or q2.degree != d - 1:
            raise InvalidMatrix(f"q-entries must have degree {d - 1}, got {q1.degree}, {q2.degree}")
        self.d = d
        self.z1 = z1
        self.z2 = z2
        self.q1 = q1
        self.q2 = q2

    @property
    def rows(self) -> Tuple[Tuple[Form, Form], Tuple[Form, Form]]:
        return ((self.z1, self.q1), (self.z2, self.q2))

    def coordinates(self) -> List[Fraction]:
        """(a0, a1, a2, b0, b1, b2, A_ij..., B_ij...) with A_ij, B_ij in graded-lex order."""
        return self.z1.coefficients() + self.z2.coefficients() + self.q1.coefficients() + self.q2.coefficients()

    @classmethod
    def coordinate_count(cls, d: int) -> int:
        return 6 + 2 * len(monomials(d - 1))

    @classmethod
    def from_coordinates(cls, d: int, coords: Sequence[Any]) -> Any:
        n = len(monomials(d - 1))
        if len(coords) != 6 + 2 * n:
            raise MalformedInputError("matrix", f"expected {6 + 2 * n} coordinates, got {len(coords)}")
        return cls(
            Form.linear(coords[0:3]),
            Form.linear(coords[3:6]),
            Form.from_coefficients(d - 1, coords[6 : 6 + n]),
            Form.from_coefficients(d - 1, coords[6 + n :]),
            d,
        )

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        assert isinstance(other, MatrixEntries)
        return self.d == other.d and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.d, self.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}([[{self.z1}, {self.q1}], [{self.z2}, {self.q2}]])"

    def to_json(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "z1": self.z1.to_json(),
            "z2": self.z2.to_json(),
            "q1": self.q1.to_json(),
            "q2": self.q2.to_json(),
        }

    @classmethod
    def from_json(cls, raw: Any) -> Any:
        if not isinstance(raw, dict) or not {"z1", "z2", "q1", "q2"} <= set(raw):
            raise MalformedInputError("matrix", "expected an object with z1, z2, q1, q2")
        try:
            d = int(raw["d"]) if "d" in raw else None
        except (TypeError, ValueError) as e:
            raise MalformedInputError("matrix", f"bad degree {raw['d']!r}") from e
        q_degree = None if d is None else d - 1
        return cls(
            _entry_from_json(raw["z1"], 1),
            _entry_from_json(raw["z2"], 1),
            _entry_from_json(raw["q1"], q_degree),
            _entry_from_json(raw["q2"], q_degree),
            d,
        )


def _entry_from_json(raw: Any, degree: Optional[int]) -> Form:
    # textual entries such as "0" carry no degree of their own
    if isinstance(raw, str):
        return Form.parse(raw, degree)
    return Form.from_json(raw)


class MatrixA(MatrixEntries):
    """A point of X: independent z1, z2 and nonzero determinant."""

    __slots__ = ()

    def __init__(self, z1: Form, z2: Form, q1: Form, q2: Form, d: Optional[int] = None) -> None:
        super().__init__(z1, z2, q1, q2, d)
        common_zero(z1, z2)
        if self.det().is_zero():
            raise InvalidMatrix("determinant z1*q2 - z2*q1 vanishes")

    def det(self) -> Form:
        return self.z1 * self.q2 - self.z2 * self.q1

    @property
    def point(self) -> Point:
        return common_zero(self.z1, self.z2)


class GroupElement:
    """(g, h) with g in GL2 and h = (lambda q; 0 mu) acting by A -> g*A*h^-1."""

    __slots__ = ("g", "h_lambda", "h_mu", "h_q")

    def __init__(self, g: Sequence[Sequence[Any]], h_lambda: Any, h_mu: Any, h_q: Form) -> None:
        rows = tuple(tuple(to_scalar(c) for c in row) for row in g)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise MalformedInputError("group element", "g must be 2x2")
        self.g: Matrix2 = (rows[0], rows[1])  # type: ignore[assignment]
        if determinant(self.g) == 0:
            raise InvalidMatrix("g is not invertible")
        self.h_lambda = to_scalar(h_lambda)
        self.h_mu = to_scalar(h_mu)
        if not self.h_lambda or not self.h_mu:
            raise InvalidMatrix("lambda and mu must be nonzero")
        if h_q.degree < 1:
            raise InvalidMatrix(f"h_q must have degree d - 2 >= 1, got {h_q.degree}")
        self.h_q = h_q

    @property
    def d(self) -> int:
        return self.h_q.degree + 2

    @classmethod
    def identity(cls, d: int) -> "GroupElement":
        return cls.scalar(d, 1)

    @classmethod
    def scalar(cls, d: int, lam: Any) -> "GroupElement":
        return cls(((lam, 0), (0, lam)), lam, lam, Form.zero(d - 2))

    def compose(self, other: "GroupElement") -> "GroupElement":
        """The element acting as ``other`` first, then ``self``."""
        (a, b), (c, e) = self.g
        (p, q), (r, s) = other.g
        g = ((a * p + b * r, a * q + b * s), (c * p + e * r, c * q + e * s))
        # h = h_self * h_other
        h_q = other.h_q.scale(self.h_lambda) + self.h_q.scale(other.h_mu)
        return GroupElement(g, self.h_lambda * other.h_lambda, self.h_mu * other.h_mu, h_q)

    def inverse(self) -> "GroupElement":
        h_q = self.h_q.scale(-1 / (self.h_lambda * self.h_mu))
        return GroupElement(invert(self.g), 1 / self.h_lambda, 1 / self.h_mu, h_q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.g, self.h_lambda, self.h_mu, self.h_q) == (other.g, other.h_lambda, other.h_mu, other.h_q)

    def __hash__(self) -> int:
        return hash((self.g, self.h_lambda, self.h_mu, self.h_q))

    def __repr__(self) -> str:
        return f"GroupElement(g={self.g}, lambda={self.h_lambda}, mu={self.h_mu}, q={self.h_q})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "g": [[scalar_to_json(c) for c in row] for row in self.g],
            "lambda": scalar_to_json(self.h_lambda),
            "mu": scalar_to_json(self.h_mu),
            "h_q": self.h_q.to_json(),
        }

    @classmethod
    def from_json(cls, raw: Any) -> "GroupElement":
        try:
            g = [[scalar_from_json(c) for c in row] for row in raw["g"]]
            return cls(g, scalar_from_json(raw["lambda"]), scalar_from_json(raw["mu"]), Form.from_json(raw["h_q"]))
        except (KeyError, TypeError) as e:
            raise MalformedInputError("group element", str(e)) from e


def det_of(A: MatrixEntries) -> Form:
    return A.z1 * A.q2 - A.z2 * A.q1


def nu(A: MatrixA) -> CurvePointPair:
    return CurvePointPair(Curve(det_of(A)), common_zero(A.z1, A.z2))


def local_section(pair: CurvePointPair) -> MatrixA:
    """A preimage of (C, p) under nu, in the chart of the first nonzero coordinate of p."""
    f = pair.curve.f
    p = pair.point
    c = p.pivot_index
    a, b = (i for i in range(3) if i != c)
    xi, eta = p.coords[a], p.coords[b]
    x = [Form.variable(i) for i in range(3)]

    # y_c = x_c, y_a = x_a - xi*x_c, y_b = x_b - eta*x_c, stored in the same slots
    to_y = list(x)
    to_y[a] = x[a] + x[c].scale(xi)
    to_y[b] = x[b] + x[c].scale(eta)
    from_y = list(x)
    from_y[a] = x[a] - x[c].scale(xi)
    from_y[b] = x[b] - x[c].scale(eta)

    shifted = f.substitute(to_y)
    g_terms: Dict[Tuple[int, ...], Fraction] = {}
    h_terms: Dict[Tuple[int, ...], Fraction] = {}
    for exps, coeff in shifted.terms.items():
        lowered = list(exps)
        if exps[a]:
            lowered[a] -= 1
            g_terms[tuple(lowered)] = coeff
        elif exps[b]:
            lowered[b] -= 1
            h_terms[tuple(lowered)] = coeff
        else:
            # only the pure x_c^d term is left, and f(p) = 0 kills it
            raise InvalidMatrix(f"f does not vanish at {p}")
    G = Form(f.degree - 1, g_terms).substitute(from_y)
    H = Form(f.degree - 1, h_terms).substitute(from_y)
    return MatrixA(from_y[a], from_y[b], -H, G, f.degree)


def act(e: GroupElement, A: MatrixA) -> MatrixA:
    if e.d != A.d:
        raise InvalidMatrix(f"group element of degree {e.d} cannot act on degree {A.d}")
    # rows of A*h^-1, where h^-1 = (1/lambda, -q/(lambda*mu); 0, 1/mu)
    lam_inv, mu_inv = 1 / e.h_lambda, 1 / e.h_mu
    q_inv = e.h_q.scale(-lam_inv * mu_inv)
    right = [(z.scale(lam_inv), z * q_inv + q.scale(mu_inv)) for z, q in A.rows]
    (g11, g12), (g21, g22) = e.g
    new_rows = [
        (right[0][col].scale(g11) + right[1][col].scale(g12), right[0][col].scale(g21) + right[1][col].scale(g22))
        for col in range(2)
    ]
    (z1, z2), (q1, q2) = new_rows
    return MatrixA(z1, z2, q1, q2, A.d)


def same_fiber(A1: MatrixA, A2: MatrixA) -> Optional[GroupElement]:
    """A group element e with act(e, A1) == A2, or None if nu(A1) != nu(A2)."""
    if A1.d != A2.d:
        raise InvalidMatrix(f"matrices of degrees {A1.d} and {A2.d} lie over different M")
    d = A1.d
    if A1.point != A2.point:
        return None

    # g0 sends the z-column of A1 to the z-column of A2
    columns = list(zip(A1.z1.coefficients(), A1.z2.coefficients()))
    g_rows = [solve_linear(columns, z.coefficients()) for z in (A2.z1, A2.z2)]
    if g_rows[0] is None or g_rows[1] is None:
        return None
    g0 = GroupElement(g_rows, 1, 1, Form.zero(d - 2))
    moved = act(g0, A1)

    det1, det2 = moved.det(), A2.det()
    lead = max(det2.terms)
    xi = det1.coefficient(lead) / det2.terms[lead]
    if not xi or det1 != det2.scale(xi):
        return None

    # (q1/xi - q1', q2/xi - q2') = h * (z1, z2), solved on coefficients
    # A2 = moved * (1, -h; 0, 1/xi), so the witness stores the inverse factor
    basis = [Form.monomial(m) for m in monomials(d - 2)]
    rows = [
        list(col)
        for col in zip(*[(m * A2.z1).coefficients() + (m * A2.z2).coefficients() for m in basis])
    ]
    rhs = (moved.q1.scale(1 / xi) - A2.q1).coefficients() + (moved.q2.scale(1 / xi) - A2.q2).coefficients()
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    h = Form.from_coefficients(d - 2, solution)
    witness = GroupElement(g0.g, 1, xi, h.scale(xi))
    if act(witness, A1) != A2:
        logger.debug(f"Fiber witness failed verification for {A1!r} -> {A2!r}")
        return None
    logger.debug(f"Fiber witness found: {witness!r}")
    return witness


def stabilizer(A: MatrixA) -> List[List[Fraction]]:
    """
    Basis of the solutions of g*A = A*h, i.e. g*A*h^-1 = A, in the unknowns
    (g11, g12, g21, g22, lambda, mu, h_q coefficients...).
    """
    d = A.d
    zero1, zero_q = Form.zero(1), Form.zero(d - 1)
    # contribution of each unknown to the entries (1,1), (2,1), (1,2), (2,2) of g*A - A*h
    contributions: List[Tuple[Form, Form, Form, Form]] = [
        (A.z1, zero1, A.q1, zero_q),
        (A.z2, zero1, A.q2, zero_q),
        (zero1, A.z1, zero_q, A.q1),
        (zero1, A.z2, zero_q, A.q2),
        (-A.z1, -A.z2, zero_q, zero_q),
        (zero1, zero1, -A.q1, -A.q2),
    ]
    for m in monomials(d - 2):
        mono = Form.monomial(m)
        contributions.append((zero1, zero1, -(A.z1 * mono), -(A.z2 * mono)))
    columns = [sum((entry.coefficients() for entry in c), []) for c in contributions]
    rows = [list(row) for row in zip(*columns)]
    return nullspace(rows, len(columns))


def stabilizer_is_scalar(A: MatrixA) -> bool:
    """True iff the stabilizer of A is the line of scalar pairs (lambda*I, lambda*I)."""
    kernel = stabilizer(A)
    if len(kernel) != 1:
        return False
    v = kernel[0]
    lam = v[0]
    return bool(lam) and v[:6] == [lam, 0, 0, lam, lam, lam] and not any(v[6:])


# ---------- Numerical invariants ----------
def _int_fields(cls: type, raw: Any, what: str) -> Dict[str, int]:
    names = [f.name for f in fields(cls)]
    if not isinstance(raw, dict) or not set(names) <= set(raw):
        raise MalformedInputError(what, f"expected an object with {', '.join(names)}")
    values = {name: raw[name] for name in names}
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values.values()):
        raise MalformedInputError(what, f"non-integer field in {values!r}")
    return values


@dataclass(frozen=True)
class HilbertPoly:
    a: int
    b: int

    def __call__(self, m: int) -> int:
        return self.a * m + self.b

    def __str__(self) -> str:
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}m{sign}{abs(self.b)}"

    def to_json(self) -> Dict[str, int]:
        return asdict(self)

    @classmethod
    def from_json(cls, raw: Any) -> "HilbertPoly":
        return cls(**_int_fields(cls, raw, "hilbert polynomial"))


def _chi_line_bundle(twist: int, m: sympy.Symbol) -> sympy.Expr:
    """Euler characteristic of O_P2(twist)(m)."""
    return sympy.Rational(1, 2) * (m + twist + 2) * (m + twist + 1)


def hilbert_from_resolution(d: int) -> HilbertPoly:
    check_degree(d)
    m = sympy.Symbol("m")
    chi = _chi_line_bundle(-d + 2, m) + _chi_line_bundle(0, m) - 2 * _chi_line_bundle(-d + 1, m)
    poly = sympy.Poly(sympy.expand(chi), m)
    if poly.degree() > 1:
        raise InvalidMatrix(f"resolution of degree {d} is not one-dimensional")
    return HilbertPoly(int(poly.coeff_monomial(m)), int(poly.coeff_monomial(1)))


@dataclass(frozen=True)
class DimensionReport:
    dim_X: int
    N: int
    dim_M: int
    codim_simpson: int
    codim_Xprime: int
    codim_Mprime: int
    dim_simpson: int
    dim_G: int

    def to_json(self) -> Dict[str, int]:
        return asdict(self)

    @classmethod
    def from_json(cls, raw: Any) -> "DimensionReport":
        return cls(**_int_fields(cls, raw, "dimension report"))


def dimension_report(d: int) -> DimensionReport:
    check_degree(d)
    n = (d + 2) * (d + 1) // 2 - 1
    codim = d * (d - 3) // 2
    return DimensionReport(
        dim_X=d * d + d + 6,
        N=n,
        dim_M=n + 1,
        codim_simpson=codim,
        codim_Xprime=2,
        codim_Mprime=2,
        dim_simpson=n + 1 + codim,
        dim_G=6 + d * (d - 1) // 2,
    )


def _check_stability_domain(d: int, s: int, h0Q: int) -> None:
    check_degree(d)
    if not 1 <= s < d:
        raise DomainViolation("s", s, f"1 <= s < {d}")
    if h0Q < 0:
        raise DomainViolation("h0Q", h0Q, "h0Q >= 0")


def stability_inequality(d: int, s: int, h0Q: int) -> bool:
    """1 < s*d/2 + d*h0Q/(d - s), compared exactly."""
    _check_stability_domain(d, s, h0Q)
    return Fraction(1) < Fraction(s * d, 2) + Fraction(d * h0Q, d - s)


def reduced_slopes(d: int, s: int, h0Q: int) -> Tuple[Fraction, Fraction]:
    """
    Constant terms of the reduced Hilbert polynomials of a subsheaf E with
    multiplicity s and of the ideal sheaf I of a point on a degree-d curve.
    """
    _check_stability_domain(d, s, h0Q)
    p_e = Fraction(3, 2) - Fraction(d + s, 2) - Fraction(h0Q, d - s)
    p_i = Fraction(3 - d, 2) - Fraction(1, d)
    return p_e, p_i
