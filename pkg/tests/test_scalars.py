"""Tests for exact scalars, complex arrays, conjugation maps and constant matrices."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.n6_algebra.scalars import (
    I_UNIT,
    ONE,
    CArray,
    ConjMap,
    GaussRat,
    is_hermitian,
    is_symplectic,
    make_H,
    make_J,
    make_S,
    parse_scalar,
)

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)
gauss = st.builds(GaussRat, fractions, fractions)


class TestGaussRat:
    """Exact Gaussian rational arithmetic."""

    @given(gauss, gauss, gauss)
    @settings(max_examples=60)
    def test_addition_is_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(gauss, gauss, gauss)
    @settings(max_examples=60)
    def test_multiplication_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(gauss)
    @settings(max_examples=60)
    def test_inverse(self, a):
        if a:
            assert a * a.inverse() == ONE
        else:
            with pytest.raises(ZeroDivisionError):
                a.inverse()

    @given(gauss)
    @settings(max_examples=60)
    def test_conjugation_is_involutive(self, a):
        assert a.conjugate().conjugate() == a

    def test_normalized_parts(self):
        """Denominators are positive and reduced."""
        z = GaussRat(Fraction(2, -4), Fraction(3, 6))
        assert z.parts == (-1, 1, 2)

    def test_mixing_with_float_is_rejected(self):
        with pytest.raises(TypeError):
            GaussRat(1) + 1.5
        with pytest.raises(TypeError):
            GaussRat(1.5)  # type: ignore[arg-type]

    def test_parse(self):
        assert GaussRat.parse("3/5+4/5i") == GaussRat(Fraction(3, 5), Fraction(4, 5))
        assert GaussRat.parse("-i") == -I_UNIT
        assert GaussRat.parse("1-2i") == GaussRat(1, -2)
        assert GaussRat.parse("2") == GaussRat(2)
        with pytest.raises(ValueError, match="cannot parse"):
            GaussRat.parse("abc")

    def test_parse_scalar_float_mode(self):
        assert parse_scalar("0.5+1.5i", "float") == complex(0.5, 1.5)
        assert parse_scalar("1/2", "float") == complex(0.5, 0)

    def test_str_round_trips_through_parse(self):
        for z in [GaussRat(Fraction(3, 5), Fraction(4, 5)), GaussRat(0, -1), GaussRat(7)]:
            assert GaussRat.parse(str(z)) == z

    def test_sqrt(self):
        assert GaussRat(-1).sqrt() == I_UNIT
        assert GaussRat(0, 2).sqrt() == GaussRat(1, 1)
        assert GaussRat(4).sqrt() == GaussRat(2)
        assert GaussRat(2).sqrt() is None

    def test_json(self):
        z = GaussRat(Fraction(-3, 5), Fraction(4, 7))
        assert z.to_json() == [-3, 5, 4, 7]
        assert GaussRat.from_json([-3, 5, 4, 7]) == z


class TestCArray:
    """Dense exact and float arrays."""

    def test_exact_normalization(self):
        a = CArray.exact([[2, 4]], [[0, 6]], den=2)
        re_part, im_part, den = a.numerators
        assert den == 1
        assert list(re_part.flat) == [1, 2]
        assert list(im_part.flat) == [0, 3]

    def test_indexing_returns_scalars(self):
        a = CArray.from_scalars([[GaussRat(1, 2), 3], [Fraction(1, 2), 0]])
        assert a[0, 0] == GaussRat(1, 2)
        assert a[1, 0] == GaussRat(Fraction(1, 2))
        assert a[1].shape == (2,)

    def test_matmul_and_inverse(self):
        m = CArray.from_scalars([[GaussRat(1, 1), 2], [0, GaussRat(0, 1)]])
        assert (m @ m.inverse()).equals(CArray.identity(2))
        assert (m.inverse() @ m).equals(CArray.identity(2))

    def test_singular_inverse(self):
        with pytest.raises(ValueError, match="singular"):
            CArray.from_scalars([[1, 2], [2, 4]]).inverse()

    def test_det(self):
        m = CArray.from_scalars([[0, 1], [-1, 0]])
        assert m.det() == ONE
        assert CArray.from_scalars([[1, 2], [2, 4]]).det() == GaussRat(0)

    def test_conj_involution(self):
        m = CArray.from_scalars([[GaussRat(1, 2), GaussRat(0, -1)]])
        assert m.conj().conj().equals(m)
        assert not m.conj().equals(m)

    def test_mixing_backends_is_rejected(self):
        with pytest.raises(TypeError, match="cannot mix"):
            CArray.identity(2) + CArray.identity(2, "float")
        with pytest.raises(TypeError):
            CArray.identity(2).scale(0.5)

    def test_scale_and_times_i(self):
        v = CArray.from_scalars([1, GaussRat(0, 1)])
        assert v.times_i().equals(v.scale(I_UNIT))
        assert v.scale(GaussRat(0, 1)).equals(CArray.from_scalars([GaussRat(0, 1), -1]))

    def test_tensordot_matches_numpy(self):
        rng = np.random.default_rng(3)
        re_a = rng.integers(-3, 4, size=(2, 3, 4))
        im_a = rng.integers(-3, 4, size=(2, 3, 4))
        re_b = rng.integers(-3, 4, size=(4, 5))
        im_b = rng.integers(-3, 4, size=(4, 5))
        a, b = CArray.exact(re_a, im_a), CArray.exact(re_b, im_b)
        expected = np.tensordot(re_a + 1j * im_a, re_b + 1j * im_b, axes=1)
        assert np.allclose(a.tensordot(b, axes=1).to_complex(), expected)

    def test_full_contraction_to_scalar(self):
        x = CArray.from_scalars([GaussRat(1, 1), Fraction(1, 2)])
        y = CArray.from_scalars([GaussRat(0, -1), GaussRat(3, 0)])
        dot = x.tensordot(y, axes=1)
        assert dot.shape == ()
        assert dot[()] == GaussRat(Fraction(5, 2), -1)
        assert (-dot)[()] == GaussRat(Fraction(-5, 2), 1)
        halves = CArray.from_scalars([Fraction(1, 2)])
        assert halves.tensordot(halves.scale(2), axes=1)[()] == GaussRat(Fraction(1, 2))

    def test_kron(self):
        a = CArray.from_scalars([[1, 0], [0, -1]])
        b = CArray.from_scalars([[0, GaussRat(0, 1)], [1, 0]])
        assert np.allclose(a.kron(b).to_complex(), np.kron(a.to_complex(), b.to_complex()))

    def test_realify(self):
        v = CArray.from_scalars([GaussRat(1, 2), GaussRat(Fraction(1, 2), 0)])
        real = v.realify()
        assert real == [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(0)]
        assert CArray.from_realified(real).equals(v)

    def test_json_format(self):
        m = CArray.from_scalars([[GaussRat(Fraction(1, 2), 1), 0]])
        payload = m.to_json()
        assert payload == {
            "mode": "exact",
            "rows": 1,
            "cols": 2,
            "data": [[1, 2, 1, 1], [0, 1, 0, 1]],
        }
        assert CArray.from_json(payload).equals(m)

    def test_float_json(self):
        m = CArray.from_float([[1 + 2j]])
        assert m.to_json()["data"] == [[1.0, 2.0]]


class TestConjMap:
    """Anti-linear maps stored as conjugate-then-linear."""

    @pytest.fixture
    def twist(self):
        return ConjMap(CArray.from_scalars([[0, 1], [GaussRat(0, 1), 0]]), antilinear=True)

    def test_antilinearity(self, twist):
        x = CArray.from_scalars([GaussRat(1, 3), GaussRat(-2, 1)])
        for lam in [ONE, I_UNIT, GaussRat(1, 2)]:
            assert twist(x.scale(lam)).equals(twist(x).scale(lam.conjugate()))

    def test_square_is_linear(self, twist):
        square = twist.squared()
        assert not square.antilinear
        assert square.mat.equals(twist.mat @ twist.mat.conj())
        for k in range(2):
            e = CArray.unit(2, k)
            assert twist(twist(e)).equals(square(e))

    def test_identity(self):
        assert ConjMap.identity(3).is_identity()
        assert not ConjMap(CArray.identity(3), antilinear=True).is_identity()


class TestConstantMatrices:
    """S, J, H and the symplectic predicate."""

    def test_make_S(self):
        assert make_S(2, 2).equals(CArray.identity(2))
        assert make_S(2, 1).equals(CArray.diag([1, -1]))
        assert make_S(3, 0).equals(-CArray.identity(3))
        with pytest.raises(ValueError, match="0 <= p <= n"):
            make_S(2, 3)

    def test_make_J(self):
        J2 = make_J(2)
        assert J2.equals(CArray.from_scalars([[0, 1], [-1, 0]]))
        assert J2.T.equals(-J2)
        J4 = make_J(4)
        assert (J4 @ J4).equals(-CArray.identity(4))
        with pytest.raises(ValueError, match="even"):
            make_J(3)

    def test_make_H(self):
        assert make_H(2, 1).equals(CArray.identity(2))
        assert make_H(4, 1).equals(CArray.diag([1, -1, 1, -1]))
        assert make_H(4, 0).equals(-CArray.identity(4))
        with pytest.raises(ValueError):
            make_H(4, 3)

    def test_is_symplectic(self):
        assert is_symplectic(CArray.identity(4))
        assert is_symplectic(make_J(4))
        assert not is_symplectic(CArray.diag([2, 1, 1, 1]))
        with pytest.raises(ValueError, match="even"):
            is_symplectic(CArray.identity(3))

    def test_is_symplectic_float_tolerance(self):
        m = make_J(4).to_float()
        assert is_symplectic(m, tol=1e-12)

    def test_hermitian(self):
        h = CArray.from_scalars([[1, GaussRat(0, 1)], [GaussRat(0, -1), 2]])
        assert is_hermitian(h)
        assert not is_hermitian(h.times_i())


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
