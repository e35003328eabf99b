"""Tests for the matrix 3-algebra families."""

import pytest

from src.n6_algebra.matrix_families import (
    FamilyFactory,
    FamilySpec,
    build_a3_star,
    build_a3n,
    build_a3n_psi,
    build_a3st,
    build_a3st_ph,
    build_a3t,
    build_a3t_ph,
    build_c3,
    build_c3_H_alpha,
    build_c3_is,
    build_c3_ph_cp,
    build_c3_physicalized,
    c3_sign_convention_holds,
    psi,
    super_transpose,
)
from src.n6_algebra.scalars import I_UNIT, CArray, GaussRat, make_J, make_S
from src.n6_algebra.three_algebra import (
    compare_brackets,
    is_simple,
    run_axiom_suite,
    scaled,
    scaled_bracket_iso_check,
)


def _unit(m, n, i, j):
    rows = [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(m)]
    return CArray.from_scalars(rows).reshape(-1)


class TestA3t:
    """A^3(m,n;t) and its physicalizations."""

    def test_scalars_commute(self):
        T = build_a3t(1, 1)
        assert T.is_zero()

    def test_diagonal_units(self):
        T = build_a3t(2, 2)
        assert T(_unit(2, 2, 0, 0), _unit(2, 2, 0, 0), _unit(2, 2, 1, 1)).is_zero()

    @pytest.mark.parametrize("m,n", [(1, 2), (2, 2)])
    def test_algebraic_suite(self, m, n):
        report = run_axiom_suite(build_a3t(m, n), with_center=False, with_simple=False)
        assert report.axioms_passed()
        assert report.slot2 == "linear"

    @pytest.mark.parametrize("p,q", [(1, 1), (0, 2), (2, 0)])
    def test_physical_suite(self, p, q):
        report = run_axiom_suite(build_a3t_ph(2, 2, p, q))
        assert report.axioms_passed()
        assert report.slot2 == "antilinear"
        assert report.center_dim_real == 0
        assert report.simple is True

    def test_c00_equals_cnm(self):
        assert compare_brackets(build_a3t_ph(2, 3, 0, 0), build_a3t_ph(2, 3, 3, 2)).passed

    def test_range_violation(self):
        with pytest.raises(ValueError, match="0 <= q <= m"):
            build_a3t_ph(2, 2, 3, 0)


class TestA3n:
    """A^3(n)+ and A^3(n)-."""

    def test_repeated_argument_vanishes(self):
        T = build_a3n(2, 1)
        a = CArray.from_scalars([1, GaussRat(0, 1), 2, GaussRat(1, -1)])
        b = CArray.from_scalars([GaussRat(2, 1), 0, -1, 3])
        assert T(a, b, a).is_zero()

    def test_scalars(self):
        assert build_a3n(1, 1).is_zero()

    @pytest.mark.parametrize("sign", [1, -1])
    def test_suite(self, sign):
        report = run_axiom_suite(build_a3n(2, sign))
        assert report.axioms_passed()
        assert report.simple is True

    def test_scaled_relation(self):
        assert scaled_bracket_iso_check(build_a3n(2, 1), 4).passed

    def test_bad_sign(self):
        with pytest.raises(ValueError, match="sign"):
            build_a3n(2, 0)


class TestSuperTranspose:
    """A^3(m,n;st) families."""

    def test_involutive(self):
        for m, n in [(2, 2), (2, 4)]:
            for k in range(m * n):
                b = CArray.unit(m * n, k).reshape(m, n)
                assert super_transpose(super_transpose(b)).equals(b)

    def test_algebraic_suite(self):
        assert run_axiom_suite(build_a3st(2, 2), with_center=False).axioms_passed()

    def test_physical_suite(self):
        report = run_axiom_suite(build_a3st_ph(2, 2))
        assert report.axioms_passed()
        assert report.slot2 == "antilinear"

    def test_odd_size(self):
        with pytest.raises(ValueError, match="even"):
            build_a3st(3, 2)

    def test_star_bracket_recovers_physical_st(self):
        star = build_a3_star(make_J(2), make_J(2), -1)
        assert compare_brackets(star, build_a3st_ph(2, 2)).passed

    def test_star_bracket_hypothesis(self):
        with pytest.raises(ValueError, match="lambda conj"):
            build_a3_star(make_J(2), make_J(2), 1)


class TestC3:
    """C^3 families."""

    def test_psi_is_multiplication_by_J(self):
        v = CArray.from_scalars([1, GaussRat(0, 2), 3, GaussRat(-1, 1)])
        assert psi(v).equals(make_J(4) @ v)

    @pytest.mark.parametrize("two_n", [2, 4])
    def test_sign_convention(self, two_n):
        assert c3_sign_convention_holds(two_n)

    @pytest.mark.parametrize("two_n,p", [(2, 1), (4, 1), (4, 0)])
    def test_identification_with_physicalized(self, two_n, p):
        assert compare_brackets(
            build_c3_ph_cp(two_n, p), build_c3_physicalized(two_n, p)
        ).passed

    @pytest.mark.parametrize("two_n,p,sign", [(4, 1, 1), (2, 0, -1), (2, 1, 1)])
    def test_hermitian_suite(self, two_n, p, sign):
        report = run_axiom_suite(build_c3_ph_cp(two_n, p, sign))
        assert report.axioms_passed()
        assert report.center_dim_real == 0
        assert report.simple is True

    @pytest.mark.parametrize("two_n,sign", [(2, 1), (4, -1)])
    def test_antihermitian_suite(self, two_n, sign):
        report = run_axiom_suite(build_c3_is(two_n, sign))
        assert report.axioms_passed()
        assert report.simple is True

    def test_algebraic_suite(self):
        assert run_axiom_suite(build_c3(4), with_center=False).axioms_passed()

    def test_weight_rescaling(self):
        one = build_c3_H_alpha(4, CArray.identity(4), GaussRat(1))
        two = build_c3_H_alpha(4, CArray.identity(4), GaussRat(2))
        assert compare_brackets(scaled(one, 2), two).passed
        assert scaled_bracket_iso_check(one, 2).passed

    def test_rejects_non_symplectic(self):
        with pytest.raises(ValueError, match="symplectic"):
            build_c3_H_alpha(2, CArray.diag([2, 1]), GaussRat(1))

    def test_rejects_mismatched_ray(self):
        with pytest.raises(ValueError, match="real"):
            build_c3_H_alpha(2, CArray.identity(2), I_UNIT)
        with pytest.raises(ValueError, match="imaginary"):
            build_c3_H_alpha(2, make_S(2, 1).times_i(), GaussRat(1))

    def test_rejects_neither_hermitian(self):
        H = CArray.from_scalars([[1, 1], [0, 1]])
        with pytest.raises(ValueError, match="hermitian or anti-hermitian"):
            build_c3_H_alpha(2, H, GaussRat(1))


class TestPsiBracket:
    """[a,b,c]_A of the A^3(n)+ identification."""

    def test_identity_matrix_is_a3n_plus(self):
        assert compare_brackets(build_a3n_psi(CArray.identity(2)), build_a3n(2, 1)).passed

    def test_singular(self):
        with pytest.raises(ValueError, match="singular"):
            build_a3n_psi(CArray.from_scalars([[1, 1], [1, 1]]))


class TestFamilyFactory:
    """Registry of finite-dimensional families."""

    def test_create(self):
        T = FamilyFactory.create(FamilySpec(name="a3t_ph", m=2, n=2, p=1, q=1))
        assert T.label == "A3(2,2;t)_ph,C(1,1)"
        assert T.dim == 4

    def test_missing_parameter(self):
        with pytest.raises(ValueError, match="needs parameter 'q'"):
            FamilyFactory.create(FamilySpec(name="a3t_ph", m=2, n=2, p=1))

    def test_c3_default_H(self):
        T = FamilyFactory.create(FamilySpec(name="c3_H_alpha", two_n=2, alpha="i"))
        assert compare_brackets(T, build_c3_is(2, 1)).passed

    def test_supported(self):
        names = FamilyFactory.get_supported_families()
        assert "c3_ph" in names
        assert "a3n_minus" in names

    def test_simple_via_factory(self):
        assert is_simple(FamilyFactory.create(FamilySpec(name="a3n_minus", n=2)))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
