"""
Exact scalar and sparse polynomial arithmetic.

Scalars are :class:`fractions.Fraction`. A :class:`Form` is a homogeneous
polynomial in ``x0, x1, x2``; a :class:`BiForm` is bihomogeneous in
``(x0, x1, x2; u0, u1, u2)``; a :class:`DElement` is a BiForm kept in normal
form modulo ``(u0*x1, u0*x2, u1*x2 - u2*x1)``, i.e. a function on D(p).

Exact linear algebra (rank, kernels, solving) is delegated to sympy.
"""

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from .exceptions import HomogeneityError, MalformedInputError

Scalar = Fraction
Exponents = Tuple[int, ...]
Terms = Dict[Exponents, Fraction]

X_NAMES = ("x0", "x1", "x2")
U_NAMES = ("u0", "u1", "u2")

# Rewrite rules of the ideal of D(p); "u2x1" is oriented u2*x1 -> u1*x2
DRING_RULES = ("u0x1", "u0x2", "u2x1")

# Textual forms: the variables x0, x1, x2, integers, + - * / ** and parentheses
FORM_TEXT = re.compile(r"(?:x[012](?![0-9])|[0-9]+|[-+*/()]|\s)*")


# ---------- Scalars ----------
def to_scalar(value: Any) -> Fraction:
    """Coerce ints, Fractions, sympy rationals and "num/den" strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError("scalar", f"boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedInputError("scalar", f"{value!r} ({e})") from e
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise MalformedInputError("scalar", f"unsupported value {value!r}")


def scalar_to_json(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def scalar_from_json(raw: Any) -> Fraction:
    if isinstance(raw, float):
        raise MalformedInputError("scalar", f"float {raw!r} is not exact")
    return to_scalar(raw)


# ---------- Term map helpers ----------
def _add_terms(left: Mapping[Exponents, Fraction], right: Mapping[Exponents, Fraction], sign: int = 1) -> Terms:
    result = dict(left)
    for exps, c in right.items():
        value = result.get(exps, 0) + sign * c
        if value:
            result[exps] = value
        else:
            result.pop(exps, None)
    return result


def _mul_terms(left: Mapping[Exponents, Fraction], right: Mapping[Exponents, Fraction]) -> Terms:
    result: Terms = {}
    for e1, c1 in left.items():
        for e2, c2 in right.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            value = result.get(exps, 0) + c1 * c2
            if value:
                result[exps] = value
            else:
                result.pop(exps, None)
    return result


def _scale_terms(terms: Mapping[Exponents, Fraction], factor: Fraction) -> Terms:
    if not factor:
        return {}
    return {exps: c * factor for exps, c in terms.items()}


def _format_terms(terms: Mapping[Exponents, Fraction], names: Sequence[str]) -> str:
    if not terms:
        return "0"
    pieces: List[str] = []
    for exps in sorted(terms, reverse=True):
        c = terms[exps]
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}**{e}")
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def monomials(degree: int) -> List[Exponents]:
    """Exponent triples of the given degree in graded-lex order, x0 > x1 > x2."""
    return [
        (e0, e1, degree - e0 - e1)
        for e0 in range(degree, -1, -1)
        for e1 in range(degree - e0, -1, -1)
    ]


# ---------- Forms ----------
class Form:
    """Homogeneous polynomial in x0, x1, x2 with exact rational coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Optional[Mapping[Iterable[int], Any]] = None) -> None:
        if degree < 0:
            raise MalformedInputError("form", f"negative degree {degree}")
        clean: Terms = {}
        for raw_exps, raw_c in (terms or {}).items():
            exps = tuple(int(e) for e in raw_exps)
            if len(exps) != 3 or min(exps) < 0 or sum(exps) != degree:
                raise MalformedInputError("form", f"exponent {exps} is not of degree {degree}")
            clean = _add_terms(clean, {exps: to_scalar(raw_c)})
        self.degree: int = degree
        self.terms: Mapping[Exponents, Fraction] = MappingProxyType(clean)

    @classmethod
    def _raw(cls, degree: int, terms: Terms) -> "Form":
        form = object.__new__(cls)
        form.degree = degree
        form.terms = MappingProxyType(terms)
        return form

    # ---------- Constructors ----------
    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls._raw(degree, {})

    @classmethod
    def constant(cls, value: Any) -> "Form":
        c = to_scalar(value)
        return cls._raw(0, {(0, 0, 0): c} if c else {})

    @classmethod
    def variable(cls, index: int) -> "Form":
        exps = [0, 0, 0]
        exps[index] = 1
        return cls._raw(1, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Any = 1) -> "Form":
        return cls(sum(exps), {tuple(exps): coeff})

    @classmethod
    def linear(cls, coeffs: Sequence[Any]) -> "Form":
        """The linear form c0*x0 + c1*x1 + c2*x2."""
        return cls(1, {exps: c for exps, c in zip(monomials(1), coeffs)})

    @classmethod
    def from_coefficients(cls, degree: int, coeffs: Sequence[Any]) -> "Form":
        """Inverse of :meth:`coefficients`."""
        basis = monomials(degree)
        if len(coeffs) != len(basis):
            raise MalformedInputError("form", f"expected {len(basis)} coefficients, got {len(coeffs)}")
        return cls(degree, dict(zip(basis, coeffs)))

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Form":
        """Parse an expression such as ``"x1*x2**2 - x0*x1*x2"``."""
        if not isinstance(text, str) or not FORM_TEXT.fullmatch(text):
            raise MalformedInputError("form", f"unexpected characters in {text!r}")
        gens = sympy.symbols(X_NAMES)
        try:
            expr = sympy.sympify(text, locals=dict(zip(X_NAMES, gens)))
            poly = sympy.Poly(expr, *gens, domain=sympy.QQ)
        except Exception as e:
            raise MalformedInputError("form", f"cannot parse {text!r} ({e})") from e
        terms = {m: to_scalar(sympy.QQ.to_sympy(c)) for m, c in poly.terms() if c}
        if degree is None:
            degrees = {sum(m) for m in terms}
            if len(degrees) != 1:
                raise MalformedInputError("form", f"cannot infer a single degree for {text!r}")
            degree = degrees.pop()
        return cls(degree, terms)

    # ---------- Queries ----------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficients(self) -> List[Fraction]:
        """Coefficients in graded-lex monomial order."""
        return [self.coefficient(m) for m in monomials(self.degree)]

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[max(self.terms)]

    def monic(self) -> "Form":
        """Scale so that the graded-lex leading coefficient is 1."""
        lead = self.leading_coefficient()
        return self if lead in (0, 1) else self.scale(1 / lead)

    # ---------- Arithmetic ----------
    def _check_same_degree(self, other: "Form") -> None:
        if self.degree != other.degree:
            raise HomogeneityError(self.degree, other.degree)

    def __add__(self, other: "Form") -> "Form":
        self._check_same_degree(other)
        return Form._raw(self.degree, _add_terms(self.terms, other.terms))

    def __sub__(self, other: "Form") -> "Form":
        self._check_same_degree(other)
        return Form._raw(self.degree, _add_terms(self.terms, other.terms, -1))

    def __neg__(self) -> "Form":
        return self.scale(-1)

    def __mul__(self, other: Any) -> "Form":
        if isinstance(other, Form):
            return Form._raw(self.degree + other.degree, _mul_terms(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other: Any) -> "Form":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Form":
        result = Form.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Any) -> "Form":
        return Form._raw(self.degree, _scale_terms(self.terms, to_scalar(factor)))

    def partial(self, index: int) -> "Form":
        if self.degree == 0:
            return Form.zero(0)
        terms: Terms = {}
        for exps, c in self.terms.items():
            if exps[index]:
                lowered = list(exps)
                lowered[index] -= 1
                terms[tuple(lowered)] = c * exps[index]
        return Form._raw(self.degree - 1, terms)

    def evaluate(self, point: Sequence[Any]) -> Fraction:
        p = [to_scalar(v) for v in point]
        total = Fraction(0)
        for (e0, e1, e2), c in self.terms.items():
            total += c * p[0] ** e0 * p[1] ** e1 * p[2] ** e2
        return total

    def substitute(self, images: Sequence["Form"]) -> "Form":
        """Replace x_i by images[i]; all images share one degree."""
        if len(images) != 3:
            raise MalformedInputError("substitution", "expected three images")
        k = images[0].degree
        for image in images:
            if image.degree != k:
                raise HomogeneityError(k, image.degree)
        powers: List[List[Form]] = [[Form.constant(1)] for _ in range(3)]
        result = Form.zero(self.degree * k)
        for exps, c in self.terms.items():
            term = Form.constant(c)
            for i, e in enumerate(exps):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * images[i])
                term = term * powers[i][e]
            result = result + term
        return result

    # ---------- Dunder plumbing ----------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return _format_terms(self.terms, X_NAMES)

    def __repr__(self) -> str:
        return f"Form({self.degree}, {self})"

    # ---------- JSON ----------
    def to_json(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "terms": {
                ",".join(str(e) for e in exps): scalar_to_json(self.terms[exps])
                for exps in sorted(self.terms, reverse=True)
            },
        }

    @classmethod
    def from_json(cls, raw: Any) -> "Form":
        if isinstance(raw, str):
            return cls.parse(raw)
        if not isinstance(raw, dict) or "degree" not in raw:
            raise MalformedInputError("form", f"expected an object with 'degree', got {raw!r}")
        try:
            degree = int(raw["degree"])
            terms = {
                tuple(int(e) for e in key.split(",")): scalar_from_json(c)
                for key, c in dict(raw.get("terms", {})).items()
            }
        except (TypeError, ValueError, AttributeError) as e:
            raise MalformedInputError("form", str(e)) from e
        return cls(degree, terms)


def form_mul(f: Form, g: Form) -> Form:
    return f * g


def form_eval(f: Form, p: Sequence[Any]) -> Fraction:
    return f.evaluate(p)


def form_partial(f: Form, i: int) -> Form:
    return f.partial(i)


def form_substitute(f: Form, images: Sequence[Form]) -> Form:
    return f.substitute(images)


# ---------- Bihomogeneous forms ----------
class BiForm:
    """Bihomogeneous polynomial in (x0, x1, x2; u0, u1, u2)."""

    __slots__ = ("bidegree", "terms")

    def __init__(self, bidegree: Tuple[int, int], terms: Optional[Mapping[Iterable[int], Any]] = None) -> None:
        a, b = bidegree
        if a < 0 or b < 0:
            raise MalformedInputError("biform", f"negative bidegree {bidegree}")
        clean: Terms = {}
        for raw_exps, raw_c in (terms or {}).items():
            exps = tuple(int(e) for e in raw_exps)
            if len(exps) != 6 or min(exps) < 0 or sum(exps[:3]) != a or sum(exps[3:]) != b:
                raise MalformedInputError("biform", f"exponent {exps} is not of bidegree {bidegree}")
            clean = _add_terms(clean, {exps: to_scalar(raw_c)})
        self.bidegree: Tuple[int, int] = (a, b)
        self.terms: Mapping[Exponents, Fraction] = MappingProxyType(clean)

    @classmethod
    def _raw(cls, bidegree: Tuple[int, int], terms: Terms) -> "BiForm":
        form = object.__new__(cls)
        form.bidegree = bidegree
        form.terms = MappingProxyType(terms)
        return form

    @classmethod
    def zero(cls, bidegree: Tuple[int, int]) -> "BiForm":
        return cls._raw(bidegree, {})

    @classmethod
    def x(cls, index: int) -> "BiForm":
        exps = [0] * 6
        exps[index] = 1
        return cls._raw((1, 0), {tuple(exps): Fraction(1)})

    @classmethod
    def u(cls, index: int) -> "BiForm":
        exps = [0] * 6
        exps[3 + index] = 1
        return cls._raw((0, 1), {tuple(exps): Fraction(1)})

    @classmethod
    def from_form(cls, f: Form) -> "BiForm":
        """Lift a form in x to bidegree (deg f, 0)."""
        return cls._raw((f.degree, 0), {exps + (0, 0, 0): c for exps, c in f.terms.items()})

    @classmethod
    def from_u_form(cls, f: Form) -> "BiForm":
        """Read a Form as a form in u, bidegree (0, deg f)."""
        return cls._raw((0, f.degree), {(0, 0, 0) + exps: c for exps, c in f.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BiForm") -> "BiForm":
        if self.bidegree != other.bidegree:
            raise HomogeneityError(self.bidegree, other.bidegree)
        return BiForm._raw(self.bidegree, _add_terms(self.terms, other.terms))

    def __sub__(self, other: "BiForm") -> "BiForm":
        if self.bidegree != other.bidegree:
            raise HomogeneityError(self.bidegree, other.bidegree)
        return BiForm._raw(self.bidegree, _add_terms(self.terms, other.terms, -1))

    def __neg__(self) -> "BiForm":
        return self.scale(-1)

    def __mul__(self, other: Any) -> "BiForm":
        if isinstance(other, BiForm):
            bidegree = (self.bidegree[0] + other.bidegree[0], self.bidegree[1] + other.bidegree[1])
            return BiForm._raw(bidegree, _mul_terms(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other: Any) -> "BiForm":
        return self.scale(other)

    def scale(self, factor: Any) -> "BiForm":
        return BiForm._raw(self.bidegree, _scale_terms(self.terms, to_scalar(factor)))

    def substitute_u(self, images: Sequence["BiForm"]) -> "BiForm":
        """Replace u_j by images[j], each of bidegree (0, 1)."""
        powers: List[List[BiForm]] = [[BiForm._raw((0, 0), {(0,) * 6: Fraction(1)})] for _ in range(3)]
        result = BiForm.zero(self.bidegree)
        for exps, c in self.terms.items():
            term = BiForm._raw((self.bidegree[0], 0), {exps[:3] + (0, 0, 0): c})
            for j, e in enumerate(exps[3:]):
                while len(powers[j]) <= e:
                    powers[j].append(powers[j][-1] * images[j])
                term = term * powers[j][e]
            result = result + term
        return result

    def substitute_u_by_x(self, images: Sequence[Form]) -> Form:
        """Replace u_j by linear forms in x; the result is a Form of degree a + b."""
        result = Form.zero(sum(self.bidegree))
        for exps, c in self.terms.items():
            term = Form(self.bidegree[0], {exps[:3]: c})
            for j, e in enumerate(exps[3:]):
                term = term * images[j] ** e
            result = result + term
        return result

    def evaluate_x(self, point: Sequence[Any]) -> Form:
        """Fix x = point; the result is a Form in u (read through the x-slots)."""
        p = [to_scalar(v) for v in point]
        terms: Terms = {}
        for exps, c in self.terms.items():
            value = c * p[0] ** exps[0] * p[1] ** exps[1] * p[2] ** exps[2]
            terms = _add_terms(terms, {exps[3:]: value})
        return Form._raw(self.bidegree[1], terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiForm):
            return NotImplemented
        return self.bidegree == other.bidegree and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.bidegree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return _format_terms(self.terms, X_NAMES + U_NAMES)

    def __repr__(self) -> str:
        return f"BiForm({self.bidegree}, {self})"

    def to_json(self) -> Dict[str, Any]:
        def key(exps: Exponents) -> str:
            return ",".join(map(str, exps[:3])) + "|" + ",".join(map(str, exps[3:]))

        return {
            "bidegree": list(self.bidegree),
            "terms": {key(exps): scalar_to_json(self.terms[exps]) for exps in sorted(self.terms, reverse=True)},
        }

    @classmethod
    def from_json(cls, raw: Any) -> "BiForm":
        if not isinstance(raw, dict) or "bidegree" not in raw:
            raise MalformedInputError("biform", f"expected an object with 'bidegree', got {raw!r}")
        try:
            a, b = (int(v) for v in raw["bidegree"])
            terms = {}
            for key, c in dict(raw.get("terms", {})).items():
                xs, us = key.split("|")
                exps = tuple(int(e) for e in xs.split(",")) + tuple(int(e) for e in us.split(","))
                terms[exps] = scalar_from_json(c)
        except (TypeError, ValueError, AttributeError) as e:
            raise MalformedInputError("biform", str(e)) from e
        return cls((a, b), terms)


# ---------- The coordinate ring of D(p) ----------
def _reduce_monomial(exps: Exponents) -> Optional[Exponents]:
    i0, i1, i2, j0, j1, j2 = exps
    if j0 and (i1 or i2):
        return None
    k = min(j2, i1)
    return (i0, i1 - k, i2 + k, j0, j1 + k, j2 - k)


def _reduce_terms(terms: Mapping[Exponents, Fraction]) -> Terms:
    result: Terms = {}
    for exps, c in terms.items():
        reduced = _reduce_monomial(exps)
        if reduced is not None:
            result = _add_terms(result, {reduced: c})
    return result


def dring_redexes(b: BiForm) -> List[Tuple[Exponents, str]]:
    """All single-step rewrites applicable to b, as (monomial, rule) pairs."""
    found = []
    for exps in sorted(b.terms, reverse=True):
        i0, i1, i2, j0, j1, j2 = exps
        if j0 and i1:
            found.append((exps, "u0x1"))
        if j0 and i2:
            found.append((exps, "u0x2"))
        if j2 and i1:
            found.append((exps, "u2x1"))
    return found


def dring_rewrite(b: BiForm, exps: Exponents, rule: str) -> BiForm:
    """Apply one rewrite rule to one monomial of b."""
    if (exps, rule) not in dring_redexes(b):
        raise MalformedInputError("rewrite", f"rule {rule} does not apply to {exps}")
    c = b.terms[exps]
    removed = _add_terms(b.terms, {exps: c}, -1)
    if rule in ("u0x1", "u0x2"):
        return BiForm._raw(b.bidegree, removed)
    i0, i1, i2, j0, j1, j2 = exps
    moved = (i0, i1 - 1, i2 + 1, j0, j1 + 1, j2 - 1)
    return BiForm._raw(b.bidegree, _add_terms(removed, {moved: c}))


class DElement:
    """A section of O_D(p)(a, b) in canonical normal form."""

    __slots__ = ("value",)

    def __init__(self, value: BiForm) -> None:
        self.value: BiForm = BiForm._raw(value.bidegree, _reduce_terms(value.terms))

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.value.bidegree

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __add__(self, other: "DElement") -> "DElement":
        return DElement(self.value + other.value)

    def __sub__(self, other: "DElement") -> "DElement":
        return DElement(self.value - other.value)

    def __neg__(self) -> "DElement":
        return DElement(-self.value)

    def __mul__(self, other: Any) -> "DElement":
        if isinstance(other, DElement):
            return DElement(self.value * other.value)
        return DElement(self.value.scale(other))

    def __rmul__(self, other: Any) -> "DElement":
        return DElement(self.value.scale(other))

    def substitute_u(self, images: Sequence[BiForm]) -> "DElement":
        return DElement(self.value.substitute_u(images))

    def restrict_to_D0(self) -> Form:
        """Pull back along u = (0 : x1 : x2)."""
        zero = Form.zero(1)
        return self.value.substitute_u_by_x((zero, Form.variable(1), Form.variable(2)))

    def restrict_to_D1(self) -> Form:
        """Restrict to the plane over p = (1:0:0); the result is a form in u."""
        return self.value.evaluate_x((1, 0, 0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DElement):
            return NotImplemented
        return self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"DElement({self.bidegree}, {self.value})"

    def to_json(self) -> Dict[str, Any]:
        return self.value.to_json()

    @classmethod
    def from_json(cls, raw: Any) -> "DElement":
        return cls(BiForm.from_json(raw))


def dring_reduce(b: BiForm) -> DElement:
    return DElement(b)


# ---------- Exact linear algebra ----------
def _sympy_matrix(rows: Sequence[Sequence[Any]], ncols: Optional[int] = None) -> sympy.Matrix:
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    flat = []
    for row in rows:
        if len(row) != width:
            raise MalformedInputError("matrix", "ragged rows")
        for c in row:
            s = to_scalar(c)
            flat.append(sympy.Rational(s.numerator, s.denominator))
    return sympy.Matrix(len(rows), width, flat)


def _from_sympy(value: Any) -> Fraction:
    return to_scalar(sympy.Rational(value))


def matrix_rank(rows: Sequence[Sequence[Any]]) -> int:
    if not rows:
        return 0
    return int(_sympy_matrix(rows).rank())


def nullspace(rows: Sequence[Sequence[Any]], ncols: int) -> List[List[Fraction]]:
    """Basis of {v : rows . v = 0}, as lists of Fractions."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = _sympy_matrix(rows, ncols).nullspace()
    return [[_from_sympy(v) for v in vector] for vector in basis]


def solve_linear(rows: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> Optional[List[Fraction]]:
    """One exact solution of rows . v = rhs (free parameters set to 0), or None."""
    matrix = _sympy_matrix(rows)
    target = _sympy_matrix([[c] for c in rhs], 1)
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    solution = solution.subs({t: 0 for t in params})
    return [_from_sympy(v) for v in solution]


def invert(rows: Sequence[Sequence[Any]]) -> List[List[Fraction]]:
    matrix = _sympy_matrix(rows)
    inverse = matrix.inv()
    return [[_from_sympy(inverse[i, j]) for j in range(matrix.cols)] for i in range(matrix.rows)]


def determinant(rows: Sequence[Sequence[Any]]) -> Fraction:
    return _from_sympy(_sympy_matrix(rows).det())


def identity_rows(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
