"""
Test suite for the curvemoduli.singularlocus module: membership in X',
the Jacobian of (f1, f2), tangent vectors, residues and normalization.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemoduli.exactalg import Form
from curvemoduli.exceptions import InvalidMatrix, NotInSingularLocus, NotNormalized
from curvemoduli.fibration import GroupElement, MatrixA, act, nu
from curvemoduli.plane import Curve, Point, is_singular_point
from curvemoduli.sampling import Sampler
from curvemoduli.singularlocus import (
    TangentVector,
    chart_coefficients,
    is_normalized,
    is_singular_sheaf,
    jacobian,
    jacobian_rank,
    normalize,
    residue,
    singular_equations,
    tangent_contains,
)


def matrix(z1, z2, q1, q2, d=3):
    return MatrixA.from_json({"d": d, "z1": z1, "z2": z2, "q1": q1, "q2": q2})


def vector(z1="0", z2="0", q1="0", q2="0", d=3):
    return TangentVector.from_json({"d": d, "z1": z1, "z2": z2, "q1": q1, "q2": q2})


@pytest.fixture
def running():
    """The running example [[x1, x0x1], [x2, x2^2]]."""
    return matrix("x1", "x2", "x0*x1", "x2**2")


class TestSingularSheaf:
    """Test cases for membership in X'."""

    @pytest.mark.parametrize(
        "entries, expected",
        [
            (("x1", "x2", "x0*x1", "x2**2"), True),
            (("x1", "x2", "x0**2", "x2**2"), False),
            (("x1", "x2", "0", "x0*x2"), True),
        ],
    )
    def test_examples(self, entries, expected):
        """Test q1, q2 evaluated at the common zero."""
        assert is_singular_sheaf(matrix(*entries)) is expected

    def test_equations_values(self):
        """Test that f1 = q1(p) is reported when it does not vanish."""
        equations = singular_equations(matrix("x1", "x2", "x0**2", "x2**2"))
        assert (equations.f1, equations.f2) == (1, 0)
        assert equations.to_json() == {"f1": "1/1", "f2": "0/1"}

    def test_agrees_with_point_singularity(self, running):
        """Test that singular sheaves sit over singular points."""
        pair = nu(running)
        assert is_singular_point(pair.curve, pair.point)
        smooth = matrix("x1", "x2", "x0**2", "x2**2")
        assert not is_singular_point(Curve(smooth.det()), smooth.point)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 4, 5]), st.booleans())
    def test_agreement_property(self, seed, d, singular):
        """Test is_singular_sheaf against the gradient of det at the point."""
        sampler = Sampler(seed)
        A = sampler.matrix_xprime(d) if singular else sampler.matrix_x(d)
        assert is_singular_sheaf(A) == is_singular_point(Curve(A.det()), A.point)
        if singular:
            assert is_singular_sheaf(A)


class TestTangentSpace:
    """Test cases for the Jacobian, tangent_contains and residue."""

    def test_chart_coefficients(self, running):
        """Test A10 = 1 and the other three vanish."""
        assert chart_coefficients(running) == (1, 0, 0, 0)

    def test_jacobian_rank(self, running):
        """Test rank 2 on the running example."""
        assert len(jacobian(running)[0]) == 18
        assert jacobian_rank(running) == 2

    def test_jacobian_needs_singular(self):
        """Test that the Jacobian is only taken on X'."""
        with pytest.raises(NotInSingularLocus):
            jacobian(matrix("x1", "x2", "x0**2", "x2**2"))

    @pytest.mark.parametrize(
        "B, expected",
        [
            (vector(z1="x0", q1="x0**2"), True),
            (vector(z1="x0"), False),
            (vector(), True),
        ],
    )
    def test_tangent_contains(self, running, B, expected):
        """Test the tangent equations at the running example."""
        assert tangent_contains(running, B) is expected

    @pytest.mark.parametrize(
        "B, expected",
        [
            (vector(z1="x0"), (-1, 0)),
            (vector(q1="x0**2"), (1, 0)),
            (vector(q2="x0**2"), (0, 1)),
        ],
    )
    def test_residue(self, running, B, expected):
        """Test residues by direct substitution."""
        assert residue(running, B) == expected

    def test_residue_needs_normalized(self):
        """Test that residues are only defined in the standard chart."""
        A = matrix("x0 - x1", "x0 - x2", "x1**2 - x0*x1", "x2**2 - x0*x2")
        with pytest.raises(NotNormalized):
            residue(A, vector())

    def test_degree_mismatch(self, running):
        """Test that B must have the degree of A."""
        with pytest.raises(InvalidMatrix):
            tangent_contains(running, TangentVector.zero(4))

    def test_kernel_matches_tangent_equations(self, running):
        """Test kernel of the Jacobian = solutions of residue = 0 on a basis."""
        J = jacobian(running)
        count = TangentVector.coordinate_count(3)
        for i in range(count):
            B = TangentVector.from_coordinates(3, [Fraction(int(i == j)) for j in range(count)])
            in_kernel = all(sum(r * c for r, c in zip(row, B.coordinates())) == 0 for row in J)
            assert in_kernel == (residue(running, B) == (0, 0))

    def test_vector_arithmetic(self):
        """Test linear combinations of tangent vectors."""
        B = vector(z1="x0") + 2 * vector(q1="x0**2")
        assert (B.xi0, B.xi00, B.eta0, B.eta00) == (1, 2, 0, 0)
        assert B - B == TangentVector.zero(3)


class TestNormalize:
    """Test cases for normalize and transport."""

    def test_already_standard(self, running):
        """Test that a normalized matrix is a fixpoint."""
        normalization = normalize(running)
        assert normalization.is_identity_change
        assert normalization.group_part == GroupElement.identity(3)
        assert normalization.result == running

    def test_coordinate_change(self):
        """Test z1 = x0 - x1, z2 = x0 - x2 moves p = (1:1:1) to (1:0:0)."""
        A = matrix("x0 - x1", "x0 - x2", "x1**2 - x0*x1", "x2**2 - x0*x2")
        normalization = normalize(A)
        assert normalization.coord_change == ((1, 0, 0), (1, -1, 0), (1, 0, -1))
        assert Point(normalization.transform_point((1, 1, 1))) == Point([1, 0, 0])
        assert is_normalized(normalization.result)
        assert is_singular_sheaf(normalization.result)

    def test_swap_by_group_action(self):
        """Test z1 = x2, z2 = x1 is fixed by g = [[0, 1], [1, 0]] only."""
        A = matrix("x2", "x1", "x0*x2", "x1**2")
        normalization = normalize(A)
        assert normalization.is_identity_change
        assert normalization.group_part.g == ((0, 1), (1, 0))
        assert normalization.result == matrix("x1", "x2", "x1**2", "x0*x2")

    def test_idempotent(self):
        """Test normalize(normalize(A)) = normalize(A)."""
        A = matrix("x0 - x1", "x0 - x2", "x1**2 - x0*x1", "x2**2 - x0*x2")
        once = normalize(A).result
        assert normalize(once).result == once

    def test_transform_of_forms(self):
        """Test that transform rewrites forms in the new coordinates."""
        A = matrix("x0 - x1", "x0 - x2", "x1**2 - x0*x1", "x2**2 - x0*x2")
        normalization = normalize(A)
        assert normalization.transform(Form.parse("x0 - x1")) == Form.variable(1)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 4]))
    def test_transport_preserves_tangency(self, seed, d):
        """Test tangent_contains(A, B) iff residue(result, transport(B)) = 0."""
        sampler = Sampler(seed)
        A = sampler.matrix_xprime(d)
        normalization = normalize(A)
        T = sampler.tangent_to_xprime(A)
        assert tangent_contains(A, T)
        assert residue(normalization.result, normalization.transport(T)) == (0, 0)
        W = sampler.tangent_vector(d)
        assert tangent_contains(A, W) == (residue(normalization.result, normalization.transport(W)) == (0, 0))

    def test_orbit_invariance(self, running):
        """Test that the group action preserves X'."""
        e = GroupElement([[1, 2], [3, 4]], 2, -1, Form.parse("x0 + x1"))
        moved = act(e, running)
        assert is_singular_sheaf(moved)
        assert jacobian_rank(moved) == 2
