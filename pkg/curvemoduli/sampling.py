"""
Seeded random instances: forms, points, matrices in X and X', group
elements, and tangent vectors that are tangent or normal to X'.
"""

import os
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exactalg import BiForm, Form, monomials, nullspace
from .exceptions import InvalidMatrix, MalformedInputError
from .fibration import GroupElement, MatrixA, check_degree
from .plane import CurvePointPair, Point, make_pair, minors
from .singularlocus import TangentVector, is_normalized, jacobian, normalize, residue, tangent_contains

COEFF_BOUND = int(os.getenv("CURVEMODULI_COEFF_BOUND", 9))
MAX_ATTEMPTS = 1000

SeedLike = Union[int, Sequence[int]]


class InstanceKind(str, Enum):
    X = "X"
    XPRIME = "Xprime"
    TANGENT = "tangent"
    NORMAL = "normal"


class Sampler:
    """Draws exact instances with integer coefficients in [-bound, bound]."""

    def __init__(self, seed: SeedLike, bound: int = COEFF_BOUND) -> None:
        self.rng = np.random.default_rng(seed)
        self.bound = bound

    # ---------- Scalars and forms ----------
    def integer(self) -> int:
        return int(self.rng.integers(-self.bound, self.bound + 1))

    def nonzero(self) -> Fraction:
        while True:
            value = self.integer()
            if value:
                return Fraction(value)

    def index(self, n: int) -> int:
        return int(self.rng.integers(n))

    def form(self, degree: int, density: float = 1.0) -> Form:
        terms = {m: self.integer() for m in monomials(degree) if self.rng.random() < density}
        return Form(degree, terms)

    def nonzero_form(self, degree: int) -> Form:
        while True:
            f = self.form(degree)
            if not f.is_zero():
                return f

    def biform(self, a: int, b: int, terms: int = 6) -> BiForm:
        xs, us = monomials(a), monomials(b)
        chosen = {xs[self.index(len(xs))] + us[self.index(len(us))]: self.integer() for _ in range(terms)}
        return BiForm((a, b), chosen)

    def point(self) -> Point:
        while True:
            coords = [self.integer() for _ in range(3)]
            if any(coords):
                return Point(coords)

    def pair(self, d: int) -> CurvePointPair:
        """A random curve of degree d through a random point."""
        p = self.point()
        x_c = Form.variable(p.pivot_index)
        while True:
            f = self.form(d)
            f = f - (x_c**d).scale(f.evaluate(p.coords))
            if not f.is_zero():
                return make_pair(f, p)

    # ---------- Matrices ----------
    def independent_linear_forms(self) -> Tuple[Form, Form]:
        for _ in range(MAX_ATTEMPTS):
            z1, z2 = self.form(1), self.form(1)
            if any(minors(z1, z2)):
                return z1, z2
        raise InvalidMatrix("could not draw independent linear forms")

    def matrix_x(self, d: int) -> MatrixA:
        check_degree(d)
        for _ in range(MAX_ATTEMPTS):
            z1, z2 = self.independent_linear_forms()
            q1, q2 = self.form(d - 1), self.form(d - 1)
            if not (z1 * q2 - z2 * q1).is_zero():
                return MatrixA(z1, z2, q1, q2, d)
        raise InvalidMatrix(f"could not draw a matrix of degree {d}")

    def matrix_xprime(self, d: int) -> MatrixA:
        """Random member of X': subtract c*w^(d-1) from each q so it vanishes at p."""
        check_degree(d)
        for _ in range(MAX_ATTEMPTS):
            z1, z2 = self.independent_linear_forms()
            p = Point(minors(z1, z2))
            w_power = Form.variable(p.pivot_index) ** (d - 1)
            q1, q2 = (q - w_power.scale(q.evaluate(p.coords)) for q in (self.form(d - 1), self.form(d - 1)))
            if not (z1 * q2 - z2 * q1).is_zero():
                return MatrixA(z1, z2, q1, q2, d)
        raise InvalidMatrix(f"could not draw a member of X' of degree {d}")

    def normalized_xprime(self, d: int) -> MatrixA:
        return normalize(self.matrix_xprime(d)).result

    def group_element(self, d: int) -> GroupElement:
        while True:
            g = [[self.integer(), self.integer()], [self.integer(), self.integer()]]
            if g[0][0] * g[1][1] - g[0][1] * g[1][0]:
                return GroupElement(g, self.nonzero(), self.nonzero(), self.form(d - 2))

    # ---------- Tangent vectors ----------
    def tangent_vector(self, d: int) -> TangentVector:
        """An arbitrary vector of T_A X = k^(d^2+d+6)."""
        return TangentVector(self.form(1), self.form(1), self.form(d - 1), self.form(d - 1), d)

    def tangent_to_xprime(self, A: MatrixA) -> TangentVector:
        """A random combination of a basis of T_A X'."""
        basis = nullspace(jacobian(A), TangentVector.coordinate_count(A.d))
        coords = [Fraction(0)] * len(basis[0])
        for vector in basis:
            weight = self.integer()
            coords = [c + weight * v for c, v in zip(coords, vector)]
        return TangentVector.from_coordinates(A.d, coords)

    def normal_to_xprime(self, A: MatrixA) -> TangentVector:
        for _ in range(MAX_ATTEMPTS):
            B = self.tangent_vector(A.d)
            if is_normalized(A):
                if any(residue(A, B)):
                    return B
            elif not tangent_contains(A, B):
                return B
        raise InvalidMatrix("could not draw a normal vector")

    # ---------- Dispatch ----------
    def instance(self, kind: InstanceKind, d: int) -> Any:
        if kind == InstanceKind.X:
            return self.matrix_x(d)
        if kind == InstanceKind.XPRIME:
            return self.matrix_xprime(d)
        A = self.normalized_xprime(d)
        B = self.tangent_to_xprime(A) if kind == InstanceKind.TANGENT else self.normal_to_xprime(A)
        return A, B


def random_instances(kind: Union[InstanceKind, str], d: int, seed: SeedLike, n: int) -> List[Any]:
    """n instances of the given kind; (A, B) pairs with A normalized for tangent/normal."""
    check_degree(d)
    sampler = Sampler(seed)
    return [sampler.instance(InstanceKind(kind), d) for _ in range(n)]


def instance_to_json(instance: Any) -> Dict[str, Any]:
    if isinstance(instance, tuple):
        A, B = instance
        return {"A": A.to_json(), "B": B.to_json()}
    return instance.to_json()


def instance_from_json(kind: Union[InstanceKind, str], raw: Any) -> Any:
    """Inverse of :func:`instance_to_json` for instances of the given kind."""
    if InstanceKind(kind) in (InstanceKind.X, InstanceKind.XPRIME):
        return MatrixA.from_json(raw)
    try:
        return MatrixA.from_json(raw["A"]), TangentVector.from_json(raw["B"])
    except (KeyError, TypeError) as e:
        raise MalformedInputError("instance", str(e)) from e


def seed_for(seed: int, d: int, trial: Optional[int] = None) -> List[int]:
    """Per-trial seed material so that every trial is reproducible on its own."""
    return [seed, d] if trial is None else [seed, d, trial]
