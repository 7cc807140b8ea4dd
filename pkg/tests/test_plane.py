"""
Test suite for the curvemoduli.plane module: points, curves, the universal
curve M and common zeros of linear forms.
"""

from fractions import Fraction

import pytest

from curvemoduli.exactalg import Form
from curvemoduli.exceptions import DegreeTooSmall, DependentLinearForms, MalformedInputError, PointNotOnCurve
from curvemoduli.plane import Curve, CurvePointPair, Point, common_zero, gradient, is_singular_point, make_pair


def parse(text):
    return Form.parse(text)


class TestPoint:
    """Test cases for projective points."""

    def test_canonical_scaling(self):
        """Test that the first nonzero coordinate becomes 1."""
        p = Point([0, 4, -2])
        assert p.coords == (0, 1, Fraction(-1, 2))
        assert p.pivot_index == 1
        assert p == Point([0, "1/2", "-1/4"])

    def test_zero_vector_rejected(self):
        """Test that (0, 0, 0) is not a point."""
        with pytest.raises(MalformedInputError):
            Point([0, 0, 0])

    def test_json(self):
        """Test the JSON encoding as rational strings."""
        assert Point([2, 1, 0]).to_json() == ["1/1", "1/2", "0/1"]
        assert Point.from_json(["1/1", "1/2", "0/1"]) == Point([2, 1, 0])


class TestCommonZero:
    """Test cases for common_zero."""

    @pytest.mark.parametrize(
        "z1, z2, expected",
        [
            ("x1", "x2", (1, 0, 0)),
            ("x0 - x1", "x0 - x2", (1, 1, 1)),
            ("x1", "x1 + x2", (1, 0, 0)),
        ],
    )
    def test_examples(self, z1, z2, expected):
        """Test the worked examples and that both forms vanish there."""
        p = common_zero(parse(z1), parse(z2))
        assert p == Point(expected)
        assert parse(z1).evaluate(p.coords) == 0
        assert parse(z2).evaluate(p.coords) == 0

    def test_dependent_forms(self):
        """Test that proportional forms are rejected."""
        with pytest.raises(DependentLinearForms):
            common_zero(parse("x0 + x1"), parse("2*x0 + 2*x1"))


class TestSingularPoints:
    """Test cases for is_singular_point and gradient."""

    @pytest.mark.parametrize(
        "f, p, expected",
        [
            ("x1*x2**2 - x0*x1*x2", (1, 0, 0), True),
            ("x0*x2**2 - x1**3", (1, 1, 1), False),
            ("x0*x2**2 - x1**3", (1, 0, 0), True),
        ],
    )
    def test_examples(self, f, p, expected):
        """Test the node, the smooth point and the cusp."""
        assert is_singular_point(Curve(parse(f)), Point(p)) is expected

    def test_gradient(self):
        """Test the gradient of the cusp at (1:1:1)."""
        assert gradient(Curve(parse("x0*x2**2 - x1**3")), Point([1, 1, 1])) == (1, -3, 2)

    def test_point_off_curve(self):
        """Test that singularity is only asked for points on the curve."""
        with pytest.raises(PointNotOnCurve):
            is_singular_point(Curve(parse("x0*x1*x2")), Point([1, 1, 1]))


class TestCurvePointPair:
    """Test cases for points of the universal curve."""

    def test_canonical_pair(self):
        """Test that scalar multiples of f give the same pair."""
        first = make_pair(parse("x0*x1*x2"), (1, 0, 0))
        second = make_pair(parse("2*x0*x1*x2"), (1, 0, 0))
        assert first == second
        assert first.curve.f.leading_coefficient() == 1

    def test_point_not_on_curve(self):
        """Test f(1,1,1) = 1 for x0x1x2."""
        with pytest.raises(PointNotOnCurve) as excinfo:
            make_pair(parse("x0*x1*x2"), (1, 1, 1))
        assert excinfo.value.value == 1

    def test_degree_too_small(self):
        """Test that conics are rejected."""
        with pytest.raises(DegreeTooSmall):
            make_pair(parse("x0*x1"), (0, 0, 1))

    def test_zero_form(self):
        """Test that the zero form is not a curve."""
        with pytest.raises(MalformedInputError):
            Curve(Form.zero(3))

    def test_json_round_trip(self):
        """Test the {"curve", "point"} encoding."""
        pair = make_pair(parse("x1*x2**2 - x0*x1*x2"), (1, 0, 0))
        assert CurvePointPair.from_json(pair.to_json()) == pair
