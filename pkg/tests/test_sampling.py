"""
Test suite for the curvemoduli.sampling module.
"""

import json

import pytest

from curvemoduli.exceptions import DegreeTooSmall
from curvemoduli.fibration import MatrixA
from curvemoduli.sampling import InstanceKind, Sampler, instance_to_json, random_instances, seed_for
from curvemoduli.singularlocus import is_normalized, is_singular_sheaf, residue, tangent_contains


class TestRandomInstances:
    """Test cases for random_instances."""

    def test_matrices_in_X(self):
        """Test that X samples satisfy the MatrixA invariants."""
        instances = random_instances("X", 3, 11, 5)
        assert len(instances) == 5
        assert all(isinstance(A, MatrixA) for A in instances)
        assert all(not A.det().is_zero() for A in instances)

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_xprime_members(self, d):
        """Test that the projection trick lands in X'."""
        assert all(is_singular_sheaf(A) for A in random_instances(InstanceKind.XPRIME, d, 5, 5))

    def test_tangent_and_normal_pairs(self):
        """Test tangent and normal vectors at normalized members of X'."""
        for A, B in random_instances("tangent", 3, 2, 3):
            assert is_normalized(A)
            assert tangent_contains(A, B)
        for A, B in random_instances("normal", 4, 2, 3):
            assert is_normalized(A)
            assert residue(A, B) != (0, 0)

    @pytest.mark.parametrize("kind", list(InstanceKind))
    def test_deterministic(self, kind):
        """Test that the same seed gives byte-identical JSON."""
        first = json.dumps([instance_to_json(i) for i in random_instances(kind, 3, 42, 3)])
        second = json.dumps([instance_to_json(i) for i in random_instances(kind, 3, 42, 3)])
        assert first == second

    def test_different_seeds_differ(self):
        """Test that different seeds give different matrices."""
        assert random_instances("X", 3, 1, 1) != random_instances("X", 3, 2, 1)

    def test_degree_checked(self):
        """Test d >= 3."""
        with pytest.raises(DegreeTooSmall):
            random_instances("X", 2, 0, 1)

    def test_unknown_kind(self):
        """Test that an unknown kind is a ValueError."""
        with pytest.raises(ValueError):
            random_instances("conic", 3, 0, 1)


class TestSampler:
    """Test cases for the Sampler helpers."""

    def test_coefficient_bound(self):
        """Test that coefficients stay in [-bound, bound]."""
        sampler = Sampler(0, bound=2)
        f = sampler.form(4)
        assert all(abs(c) <= 2 for c in f.terms.values())

    def test_pairs_lie_on_curve(self):
        """Test that random pairs satisfy f(p) = 0."""
        sampler = Sampler(seed_for(3, 4, 0))
        pair = sampler.pair(4)
        assert pair.curve.contains(pair.point)

    def test_seed_material(self):
        """Test per-trial seed material."""
        assert seed_for(7, 3) == [7, 3]
        assert seed_for(7, 3, 12) == [7, 3, 12]
