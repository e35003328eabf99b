"""Tests for the polynomial 3-algebra families."""

from fractions import Fraction

import pytest

from src.n6_algebra.function_families import (
    FunctionFamilyFactory,
    FunctionFamilySpec,
    P3Family,
    PhysicalizedFamily,
    S3Family,
    SW3Family,
    W3BetaFamily,
    W3Family,
    check_function_family,
    check_identification,
    no_central_poly,
    p3_roster,
    p3_swap,
    poisson,
    resolve_phi,
    validate_change,
)
from src.n6_algebra.polynomials import LinearChange, PairPoly, Poly
from src.n6_algebra.scalars import I_UNIT, CArray, GaussRat

BETA = GaussRat(Fraction(3, 5), Fraction(4, 5))


def _var(roster, name):
    return Poly.var(roster, name)


class TestPoisson:
    """The Poisson bracket on p, q and t."""

    def test_p_q(self):
        roster = p3_roster(2)
        assert poisson(_var(roster, "p1"), _var(roster, "q1"), 2).equals(Poly.const(roster, 1))

    def test_t_and_one(self):
        roster = p3_roster(3)
        result = poisson(_var(roster, "t"), Poly.const(roster, 1), 3)
        assert result.equals(Poly.const(roster, -2))

    def test_self_bracket_vanishes(self):
        roster = p3_roster(3)
        f = _var(roster, "p1") * _var(roster, "t") + _var(roster, "q1")
        assert poisson(f, f, 3).is_zero()

    def test_roster_mismatch(self):
        f = Poly.var(["x1", "x2"], "x1")
        with pytest.raises(ValueError, match="roster"):
            poisson(f, f, 2)

    def test_roster_order(self):
        assert p3_roster(5) == ["p1", "p2", "q1", "q2", "t"]


class TestValidateChange:
    """Family-specific conditions on phi."""

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_p3_swap(self, m):
        assert validate_change(p3_swap(m), "p3", m).passed

    def test_p3_identity_is_invalid(self):
        result = validate_change(LinearChange.identity(2), "p3", 2)
        assert not result.passed
        assert "1-form" in result.detail

    def test_w3_identity(self):
        assert validate_change(LinearChange.identity(2), "w3").passed

    def test_w3_diag_i(self):
        assert validate_change(resolve_phi("diag-i", "w3"), "w3").passed

    def test_s3_doubling_is_invalid(self):
        doubled = LinearChange.from_rows([[2, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert not validate_change(doubled, "s3").passed

    def test_algebraic_needs_determinant_one(self):
        assert not validate_change(resolve_phi("swap", "w3"), "w3_alg").passed
        assert validate_change(resolve_phi("neg", "w3"), "w3_alg").passed

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="Unsupported"):
            validate_change(LinearChange.identity(2), "k3")


class TestP3:
    """P^3(m, phi) with the conjugated involution."""

    def test_constants(self):
        family = P3Family(2, p3_swap(2))
        one = Poly.const(family.roster, 1)
        assert family(one, one, one).is_zero()

    def test_invalid_phi(self):
        with pytest.raises(ValueError, match="invalid change of variables"):
            P3Family(2, LinearChange.identity(2))

    @pytest.mark.parametrize("m,sign", [(2, 1), (3, -1)])
    def test_sampled_suite(self, m, sign):
        report = check_function_family(P3Family(m, p3_swap(m), sign), samples=6, degree=2)
        assert report.axioms_passed()
        assert report.slot2 == "antilinear"
        assert report.fi_mode == "sampled"

    def test_identification(self):
        physical = P3Family(2, p3_swap(2), -1)
        algebraic = PhysicalizedFamily(P3Family(2, p3_swap(2), physical=False), -1)
        assert check_identification(physical, algebraic, samples=10, degree=2).passed

    def test_no_central_polynomial(self):
        assert no_central_poly(P3Family(2, p3_swap(2)), 2, 3)


class TestW3:
    """Determinant brackets on two variables."""

    def test_unit_bracket(self):
        x1, x2 = (_var(("x1", "x2"), v) for v in ("x1", "x2"))
        one = Poly.const(("x1", "x2"), 1)
        assert W3Family(LinearChange.identity(2))(x1, x2, one).equals(one)
        assert W3Family(LinearChange.identity(2), -1)(x1, x2, one).equals(-one)

    def test_repeated_argument_vanishes(self):
        family = W3Family(resolve_phi("diag-i", "w3"))
        x1, x2 = (_var(("x1", "x2"), v) for v in ("x1", "x2"))
        f = x1 * x2 + x1.scale(I_UNIT)
        assert family(f, x2 * x2, f).is_zero()

    def test_diag_i_suite(self):
        report = check_function_family(W3Family(resolve_phi("diag-i", "w3")), samples=6, degree=2)
        assert report.axioms_passed()

    def test_identification_for_real_phi(self):
        for sign in (1, -1):
            physical = W3Family(resolve_phi("neg", "w3"), sign)
            algebraic = PhysicalizedFamily(W3Family(resolve_phi("neg", "w3"), physical=False), sign)
            assert check_identification(physical, algebraic, samples=10, degree=2).passed

    def test_signs_differ(self):
        plus = W3Family(LinearChange.identity(2), 1)
        minus = W3Family(LinearChange.identity(2), -1)
        assert not check_identification(plus, minus, samples=10, degree=2).passed

    def test_no_central_polynomial(self):
        assert no_central_poly(W3Family(LinearChange.identity(2)), 2, 3)

    def test_algebraic_slot2_is_linear(self):
        family = W3Family(resolve_phi("neg", "w3"), physical=False)
        report = check_function_family(family, samples=4, degree=2)
        assert report.slot2 == "linear"


class TestW3Beta:
    """Deformation by a unit-modulus non-real beta."""

    @pytest.mark.parametrize("beta", [GaussRat(2), GaussRat(1), GaussRat(-1)])
    def test_rejected_beta(self, beta):
        with pytest.raises(ValueError, match="not real"):
            W3BetaFamily(beta, LinearChange.identity(2))

    def test_suite(self):
        report = check_function_family(
            W3BetaFamily(BETA, LinearChange.identity(2)), samples=6, degree=2
        )
        assert report.axioms_passed()

    def test_exact_suite_up_to_degree_three(self):
        family = W3BetaFamily(BETA, LinearChange.identity(2))
        assert family.mode == "exact"
        for seed in (0, 1, 2):
            report = check_function_family(family, samples=3, degree=3, seed=seed)
            assert report.fi == "pass", seed
            assert report.axioms_passed()

    def test_outer_and_middle_weights_are_conjugate(self):
        family = W3BetaFamily(BETA, LinearChange.identity(2))
        outer = family.phase * 2
        middle = family.phase * family.beta * 2
        assert middle == outer.conjugate()
        assert middle == GaussRat(Fraction(16, 5), Fraction(8, 5))

    def test_coordinate_bracket(self):
        roster = ("x1", "x2")
        x1, x2 = (_var(roster, v) for v in roster)
        one = Poly.const(roster, 1)
        family = W3BetaFamily(BETA, LinearChange.identity(2))
        expected = Poly.const(roster, GaussRat(Fraction(-16, 5), Fraction(-8, 5)))
        assert family(x1, one, x2).equals(expected)
        negative = W3BetaFamily(BETA, LinearChange.identity(2), sign=-1)
        assert negative(x1, one, x2).equals(expected.scale(-1))

    def test_differs_from_w3(self):
        beta = W3BetaFamily(BETA, LinearChange.identity(2))
        assert not check_identification(beta, W3Family(LinearChange.identity(2))).passed


class TestS3:
    """Divergence-free type bracket on the quotient by constants."""

    def test_coordinate_bracket_is_constant(self):
        roster = ("x1", "x2", "x3")
        x1, x2, x3 = (_var(roster, v) for v in roster)
        assert S3Family(LinearChange.identity(3))(x1, x2, x3).is_zero()

    def test_flip_needs_imaginary_alpha(self):
        with pytest.raises(ValueError, match="alpha"):
            S3Family(resolve_phi("flip", "s3"), GaussRat(1))

    def test_flip_suite(self):
        family = S3Family(resolve_phi("flip", "s3"), I_UNIT)
        report = check_function_family(family, samples=6, degree=2)
        assert report.axioms_passed()

    def test_basis_excludes_constants(self):
        assert all(f.degree() > 0 for f in S3Family(LinearChange.identity(3)).basis(2))

    def test_identification(self):
        physical = S3Family(LinearChange.identity(3), GaussRat(-1))
        algebraic = PhysicalizedFamily(S3Family(LinearChange.identity(3), physical=False), -1)
        assert check_identification(physical, algebraic, samples=10, degree=2).passed

    def test_no_central_polynomial(self):
        assert no_central_poly(S3Family(LinearChange.identity(3)), 1, 2)


class TestSW3:
    """Brackets on two copies of C[x]."""

    def test_unit_example(self):
        family = SW3Family(CArray.identity(2), GaussRat(1))
        x = Poly.var(["x"], "x")
        one = Poly.const(["x"], 1)
        result = family(PairPoly.embed(1, x), PairPoly.embed(1, one), PairPoly.embed(1, one))
        assert result.is_zero()

    def test_mixed_components(self):
        family = SW3Family(CArray.identity(2), GaussRat(1))
        x = Poly.var(["x"], "x")
        one = Poly.const(["x"], 1)
        result = family(PairPoly.embed(1, x), PairPoly.embed(2, one), PairPoly.embed(1, one))
        assert result.equals(PairPoly.embed(1, one))

    def test_rejects_wrong_lambda(self):
        with pytest.raises(ValueError, match="lambda"):
            SW3Family(CArray.identity(2), I_UNIT)

    def test_rejects_determinant(self):
        with pytest.raises(ValueError, match="determinant"):
            SW3Family(CArray.diag([2, 1]), GaussRat(1))

    def test_rotation_suite(self):
        a = CArray.from_scalars([[0, 1], [-1, 0]])
        report = check_function_family(SW3Family(a, I_UNIT), samples=6, degree=2)
        assert report.axioms_passed()

    def test_identity_suite(self):
        family = SW3Family(CArray.identity(2), GaussRat(-1), 1)
        report = check_function_family(family, samples=6, degree=2)
        assert report.axioms_passed()

    def test_identification_with_turns(self):
        for k in (0, 1):
            physical = SW3Family(CArray.identity(2), GaussRat(1), k)
            algebraic = PhysicalizedFamily(SW3Family(CArray.identity(2), physical=False), (-1) ** k)
            assert check_identification(physical, algebraic, samples=10, degree=2).passed

    def test_fractional_turns_use_floats(self):
        family = SW3Family(CArray.identity(2), GaussRat(1), Fraction(1, 3))
        assert family.mode == "float"
        report = check_function_family(family, samples=4, degree=2)
        assert report.axioms_passed()

    def test_fractional_turns_with_rotation(self):
        a = CArray.from_scalars([[0, 1], [-1, 0]])
        for turns in (Fraction(1, 3), Fraction(1, 5)):
            family = SW3Family(a, I_UNIT, turns)
            report = check_function_family(family, samples=4, degree=2)
            assert report.fi == "pass", turns
            assert report.axioms_passed()

    def test_twist_conjugates_before_stretching(self):
        family = SW3Family(CArray.identity(2), GaussRat(1), Fraction(1, 3))
        x = Poly.var(["x"], "x", "float")
        twisted = family.twist(x.scale(1j))
        expected = x.scale(-1j * family.stretch)
        assert twisted.equals(expected, 1e-12)


class TestFactory:
    """Registry of polynomial families."""

    def test_p3_defaults_to_swap(self):
        family = FunctionFamilyFactory.create(FunctionFamilySpec(name="p3", m=3))
        assert family.roster == ("p1", "q1", "t")

    def test_w3beta_default_beta(self):
        family = FunctionFamilyFactory.create(FunctionFamilySpec(name="w3beta"))
        assert family.beta == BETA

    def test_unknown_preset(self):
        with pytest.raises(ValueError, match="preset"):
            FunctionFamilyFactory.create(FunctionFamilySpec(name="w3", phi="flip"))

    def test_supported(self):
        names = FunctionFamilyFactory.get_supported_families()
        assert {"p3", "sw3", "w3", "w3beta", "s3"} <= set(names)

    def test_counterexample_on_failure(self):
        broken = W3Family(LinearChange.identity(2))
        broken.raw_bracket = lambda f, g, h: f * g * h
        report = check_function_family(broken, samples=5, degree=1)
        assert not report.axioms_passed()
        assert report.counterexample is not None
        assert report.counterexample.check in {"antisym", "fi", "slot2"}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
