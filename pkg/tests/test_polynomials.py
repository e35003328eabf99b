"""Tests for sparse polynomial arithmetic."""

import numpy as np
import pytest

from src.n6_algebra.polynomials import LinearChange, PairPoly, Poly, monomials
from src.n6_algebra.scalars import I_UNIT, CArray, GaussRat

XY = ("x1", "x2")


@pytest.fixture
def x():
    return Poly.var(XY, "x1")


@pytest.fixture
def y():
    return Poly.var(XY, "x2")


class TestPoly:
    """Arithmetic on a fixed roster."""

    def test_zero_coefficients_are_dropped(self, x):
        assert (x - x).is_zero()
        assert (x - x).terms == {}

    def test_product_and_degree(self, x, y):
        f = (x + y) ** 2
        assert f.coefficient((1, 1)) == GaussRat(2)
        assert f.degree() == 2

    def test_diff(self, x, y):
        f = x**3 * y
        assert f.diff("x1").equals((x**2 * y).scale(3))
        assert f.diff(1).equals(x**3)

    def test_weighted_euler_operator(self, x, y):
        f = x * y + Poly.const(XY, 5)
        g = f.weighted(lambda e: 2 - sum(e))
        assert g.equals(Poly.const(XY, 10))

    def test_conj(self, x):
        f = x.scale(GaussRat(1, 2))
        assert f.conj().equals(x.scale(GaussRat(1, -2)))

    def test_substitute(self, x, y):
        swap = LinearChange.from_rows([[0, 1], [1, 0]])
        assert swap(x * x).equals(y * y)
        assert swap(swap(x * y + x)).equals(x * y + x)

    def test_drop_constant(self, x):
        f = x + Poly.const(XY, I_UNIT)
        assert f.constant_term() == I_UNIT
        assert f.drop_constant().equals(x)

    def test_roster_mismatch(self, x):
        with pytest.raises(ValueError, match="roster"):
            x + Poly.var(("x1", "x3"), "x1")

    def test_exponent_validation(self):
        with pytest.raises(ValueError, match="roster"):
            Poly(XY, {(1,): 1})

    def test_float_comparison(self, x):
        g = x.to_float()
        assert g.mode == "float"
        assert g.equals(Poly(XY, {(1, 0): 1 + 1e-12}, "float"), tol=1e-9)

    def test_random_is_seeded(self):
        a = Poly.random(XY, 3, np.random.default_rng(4))
        b = Poly.random(XY, 3, np.random.default_rng(4))
        assert a.equals(b)
        assert a.degree() <= 3

    def test_json(self, x, y):
        f = x * y.scale(GaussRat(1, 1))
        payload = f.to_json()
        assert payload["vars"] == ["x1", "x2"]
        assert Poly.from_json(payload).equals(f)


def test_monomials_count():
    assert len(monomials(2, 3)) == 10
    assert len(monomials(3, 2)) == 10
    assert monomials(1, 2) == [(0,), (1,), (2,)]


class TestLinearChange:
    """Substitutions f -> f(M x)."""

    def test_conj_squared(self):
        phi = LinearChange.from_rows([[I_UNIT, 0], [0, -I_UNIT]])
        assert phi.conj_squared().equals(CArray.identity(2))
        assert phi.squared().equals(-CArray.identity(2))

    def test_is_real(self):
        assert LinearChange.identity(3).is_real()
        assert not LinearChange.from_rows([[I_UNIT, 0], [0, 1]]).is_real()


class TestPairPoly:
    """Two copies of the one-variable algebra."""

    def test_embed(self):
        f = Poly.var(["x"], "x")
        pair = PairPoly.embed(2, f)
        assert pair.first.is_zero()
        assert pair.component(2).equals(f)

    def test_bad_index(self):
        with pytest.raises(ValueError, match="1 or 2"):
            PairPoly.embed(3, Poly.var(["x"], "x"))

    def test_components_share_roster(self):
        with pytest.raises(ValueError, match="one-variable"):
            PairPoly(Poly.var(["x"], "x"), Poly.var(["y"], "y"))

    def test_json(self):
        pair = PairPoly(Poly.var(["x"], "x"), Poly.const(["x"], GaussRat(0, 3)))
        assert PairPoly.from_json(pair.to_json()).equals(pair)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
