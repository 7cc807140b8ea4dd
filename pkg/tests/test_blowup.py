"""
Test suite for the curvemoduli.blowup module.

The worked d = 3 example is stored as golden JSON in
tests/fixtures/running_example.json; every value there was derived by hand.
"""

import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvemoduli.blowup import (
    Automorphism,
    NormalDirection,
    PhiMatrix,
    apply_automorphism,
    common_zero_on_D1,
    is_r_bundle,
    normal_direction,
    phi,
    r_bundle_equivalent,
    restrict_to_D0,
    restrict_to_D1,
    support_curve,
    verify_equivalence,
)
from curvemoduli.exactalg import DElement
from curvemoduli.exceptions import (
    InvalidMatrix,
    MalformedInputError,
    NotInSingularLocus,
    NotNormalized,
    TangentVectorNotNormal,
)
from curvemoduli.fibration import MatrixA, det_of
from curvemoduli.plane import Point
from curvemoduli.sampling import Sampler
from curvemoduli.singularlocus import TangentVector, residue, tangent_contains

FIXTURE = Path(__file__).parent / "fixtures" / "running_example.json"
GOLDEN = json.loads(FIXTURE.read_text(encoding="utf-8"))
VECTOR_NAMES = sorted(GOLDEN["vectors"])


@pytest.fixture
def A():
    """The running example [[x1, x0x1], [x2, x2^2]]."""
    return MatrixA.from_json(GOLDEN["matrix"])


def golden_vector(name):
    return TangentVector.from_json(GOLDEN["vectors"][name]["B"])


def golden_phi(name):
    rows = GOLDEN["vectors"][name]["phi"]
    return [[DElement.from_json(e) for e in row] for row in rows]


class TestPhi:
    """Test cases for Phi(A, B)."""

    @pytest.mark.parametrize("name", VECTOR_NAMES)
    def test_golden_entries(self, A, name):
        """Test every entry of Phi against the golden fixture."""
        matrix = phi(A, golden_vector(name))
        assert [list(row) for row in matrix.entries] == golden_phi(name)
        assert matrix.bidegrees() == [[(0, 1), (1, 1)], [(0, 1), (1, 1)]]

    @pytest.mark.parametrize("name", VECTOR_NAMES)
    def test_restrict_to_D0_recovers_A(self, A, name):
        """Test that pulling back along u = (0 : x1 : x2) gives A."""
        assert restrict_to_D0(phi(A, golden_vector(name))) == A.rows

    def test_needs_normalized_singular(self):
        """Test the preconditions of phi."""
        off_chart = MatrixA.from_json(
            {"d": 3, "z1": "x0 - x1", "z2": "x0 - x2", "q1": "x1**2 - x0*x1", "q2": "x2**2 - x0*x2"}
        )
        with pytest.raises(NotNormalized):
            phi(off_chart, TangentVector.zero(3))
        smooth = MatrixA.from_json({"d": 3, "z1": "x1", "z2": "x2", "q1": "x0**2", "q2": "x2**2"})
        with pytest.raises(NotInSingularLocus):
            phi(smooth, TangentVector.zero(3))

    def test_degree_mismatch(self, A):
        """Test that B must have the degree of A."""
        with pytest.raises(InvalidMatrix):
            phi(A, TangentVector.zero(4))

    def test_json_round_trip(self, A):
        """Test the entries + provenance encoding."""
        matrix = phi(A, golden_vector("xi0"))
        restored = PhiMatrix.from_json(matrix.to_json())
        assert restored == matrix
        assert restored.A == A and restored.B == golden_vector("xi0")


class TestRBundle:
    """Test cases for the R-bundle criterion on D1(p)."""

    @pytest.mark.parametrize("name", VECTOR_NAMES)
    def test_golden_criterion(self, A, name):
        """Test is_r_bundle, tangency, residues and common zeros."""
        expected = GOLDEN["vectors"][name]
        B = golden_vector(name)
        assert is_r_bundle(A, B) is expected["r_bundle"]
        assert tangent_contains(A, B) is expected["tangent"]
        assert [f"{r.numerator}/{r.denominator}" for r in residue(A, B)] == expected["residue"]
        zero = common_zero_on_D1(phi(A, B))
        assert (zero.to_json() if zero else None) == expected["common_zero"]

    def test_restriction_rows(self, A):
        """Test the 4 x 3 rank matrix for B = (xi0 = 1)."""
        rows = restrict_to_D1(phi(A, golden_vector("xi0")))
        assert rows == [[1, 1, 0], [0, 0, 1], [0, 1, 0], [0, 0, 0]]

    @pytest.mark.parametrize("name", [n for n in VECTOR_NAMES if GOLDEN["vectors"][n]["direction"]])
    def test_normal_direction(self, A, name):
        """Test the canonical point of P(N_A)."""
        assert normal_direction(A, golden_vector(name)).to_json() == GOLDEN["vectors"][name]["direction"]

    def test_tangent_vector_has_no_direction(self, A):
        """Test that tangent vectors are rejected."""
        with pytest.raises(TangentVectorNotNormal):
            normal_direction(A, TangentVector.zero(3))

    def test_direction_scaling(self):
        """Test that directions are projective."""
        assert NormalDirection(-2, 4) == NormalDirection(1, -2)
        assert NormalDirection(0, 5).to_json() == ["0/1", "1/1"]
        assert NormalDirection.from_json(["-2/1", "4/1"]) == NormalDirection(1, -2)
        with pytest.raises(MalformedInputError):
            NormalDirection.from_json(["1/1"])

    @pytest.mark.parametrize("name", ["xi0", "zero"])
    def test_support_curve(self, A, name):
        """Test det Phi = u1u2(x2 - x0) after reduction."""
        support = support_curve(phi(A, golden_vector(name)))
        assert support == DElement.from_json(GOLDEN["support_curve"])
        assert support.restrict_to_D0() == det_of(A)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 4, 5]), st.booleans())
    def test_criterion_property(self, seed, d, tangent):
        """Test is_r_bundle iff B is normal, and the support curve, on random data."""
        sampler = Sampler(seed)
        A = sampler.normalized_xprime(d)
        B = sampler.tangent_to_xprime(A) if tangent else sampler.normal_to_xprime(A)
        matrix = phi(A, B)
        assert is_r_bundle(A, B) is not tangent
        assert restrict_to_D0(matrix) == A.rows
        support = support_curve(matrix)
        assert support.bidegree == (d - 2, 2)
        assert support.restrict_to_D0() == det_of(A)


class TestEquivalence:
    """Test cases for automorphisms and R-bundle equivalence."""

    @pytest.mark.parametrize("case", GOLDEN["equivalences"], ids=lambda c: f"{c['v1']}-{c['v2']}")
    def test_golden_equivalences(self, A, case):
        """Test the worked equivalence examples."""
        aut = r_bundle_equivalent(A, golden_vector(case["v1"]), golden_vector(case["v2"]))
        assert (aut.to_json() if aut else None) == case["automorphism"]

    def test_scaling_case(self, A):
        """Test B2 = 2 B1 gives alpha = 2, beta = gamma = 0."""
        B1 = golden_vector("xi0")
        assert r_bundle_equivalent(A, B1, 2 * B1) == Automorphism(2, 0, 0)

    def test_pullback_example(self, A):
        """Test (-1, 1, 0) pulls Phi(A, xi0) back to Phi(A, xi00)."""
        aut = Automorphism(-1, 1, 0)
        pulled = apply_automorphism(aut, phi(A, golden_vector("xi0")))
        assert pulled == phi(A, golden_vector("xi00"))
        assert verify_equivalence(A, golden_vector("xi0"), golden_vector("xi00"), aut)

    def test_identity_and_u0_free_entries(self, A):
        """Test that identity changes nothing and alpha only touches u0."""
        matrix = phi(A, golden_vector("zero"))
        assert apply_automorphism(Automorphism.identity(), matrix) == matrix
        assert apply_automorphism(Automorphism(7), matrix) == matrix

    def test_alpha_must_be_nonzero(self):
        """Test that alpha = 0 is not an automorphism."""
        with pytest.raises(InvalidMatrix):
            Automorphism(0, 1, 1)

    def test_automorphism_from_json(self):
        """Test that automorphisms parse back and keep alpha nonzero."""
        aut = Automorphism(-1, 1, 0)
        assert Automorphism.from_json(aut.to_json()) == aut
        with pytest.raises(InvalidMatrix):
            Automorphism.from_json({"alpha": "0/1", "beta": "1/1", "gamma": "0/1"})
        with pytest.raises(MalformedInputError):
            Automorphism.from_json({"alpha": "1/1"})

    def test_tangent_inputs_rejected(self, A):
        """Test that equivalence is only asked of R-bundles."""
        with pytest.raises(TangentVectorNotNormal):
            r_bundle_equivalent(A, golden_vector("zero"), golden_vector("xi0"))

    def test_common_zero_point(self, A):
        """Test the non R-bundle common zero (1 : -1 : 0)."""
        assert common_zero_on_D1(phi(A, golden_vector("xi0_xi00"))) == Point([1, -1, 0])

    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000), st.sampled_from([3, 4]))
    def test_equivalence_property(self, seed, d):
        """Test B2 = alpha B1 + T is equivalent to B1 with the constructed alpha."""
        sampler = Sampler(seed)
        A = sampler.normalized_xprime(d)
        B1 = sampler.normal_to_xprime(A)
        alpha = sampler.nonzero()
        B2 = B1.scale(alpha) + sampler.tangent_to_xprime(A)
        aut = r_bundle_equivalent(A, B1, B2)
        assert aut is not None and aut.alpha == alpha
        assert verify_equivalence(A, B1, B2, aut)
        back = r_bundle_equivalent(A, B2, B1)
        assert back is not None and back.alpha == 1 / alpha
