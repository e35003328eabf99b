"""Tests for the 3-algebra interface and its axiom checkers."""

import pytest

from src.n6_algebra.matrix_families import (
    build_a3n,
    build_a3t,
    build_a3t_ph,
    build_c3_physicalized,
)
from src.n6_algebra.scalars import CArray, ConjMap, GaussRat
from src.n6_algebra.three_algebra import (
    BudgetExceededError,
    TriSystem,
    center,
    check_anticommutativity,
    check_fundamental_identity,
    check_jordan_axioms,
    check_slot2_linearity,
    compare_brackets,
    direct_sum,
    is_simple,
    physicalize,
    run_axiom_suite,
    scaled_bracket_iso_check,
)


def _replay(counterexample, T):
    """Re-evaluate both sides of an anti-commutativity counterexample."""
    a, b, c = (CArray.from_json(v).reshape(-1) for v in counterexample.inputs)
    return T(a, b, c), -T(c, b, a)


@pytest.fixture
def a3n_plus():
    return build_a3n(2, 1)


@pytest.fixture
def symmetric_bracket():
    """A^3(2)+ with the sign between the two terms flipped."""

    def bracket(a, b, c):
        a, b, c = (v.reshape(2, 2) for v in (a, b, c))
        return (a @ b.conj() @ c + c @ b.conj() @ a).times_i().reshape(-1)

    return TriSystem(4, "antilinear", bracket, "broken")


@pytest.fixture
def no_i_bracket():
    """A^3(2)+ without the factor i."""

    def bracket(a, b, c):
        a, b, c = (v.reshape(2, 2) for v in (a, b, c))
        return (a @ b.conj() @ c - c @ b.conj() @ a).reshape(-1)

    return TriSystem(4, "antilinear", bracket, "no-i")


class TestAnticommutativity:
    """[a,b,c] = -[c,b,a]."""

    def test_zero_bracket(self):
        assert check_anticommutativity(build_a3t(1, 1)).passed

    def test_a3n_plus(self, a3n_plus):
        result = check_anticommutativity(a3n_plus)
        assert result.passed
        assert result.evaluations == 2 * 4**3

    def test_mutation_has_replayable_counterexample(self, symmetric_bracket):
        result = check_anticommutativity(symmetric_bracket)
        assert result.status == "fail"
        assert result.counterexample is not None
        lhs, rhs = _replay(result.counterexample, symmetric_bracket)
        assert not lhs.equals(rhs)


class TestFundamentalIdentity:
    """The five-argument identity."""

    def test_zero_bracket(self):
        assert check_fundamental_identity(build_a3t(1, 1)).passed

    def test_a3t_ph_2_2(self):
        result = check_fundamental_identity(build_a3t_ph(2, 2, 1, 1))
        assert result.passed
        assert result.evaluations == 4 * 4**5

    def test_missing_factor_i_fails(self, no_i_bracket):
        result = check_fundamental_identity(no_i_bracket)
        assert result.status == "fail"
        example = result.counterexample
        assert example is not None
        assert example.lhs != example.rhs

    def test_budget(self, a3n_plus):
        with pytest.raises(BudgetExceededError, match="sampled"):
            check_fundamental_identity(a3n_plus, budget=100)

    def test_sampled_mode_records_seed(self, a3n_plus):
        result = check_fundamental_identity(a3n_plus, mode="sampled", samples=40, seed=7)
        assert result.passed
        assert result.mode == "sampled"
        assert result.seed == 7

    def test_sampled_mode_finds_failure(self, no_i_bracket):
        result = check_fundamental_identity(no_i_bracket, mode="sampled", samples=300, seed=1)
        assert result.status == "fail"


class TestSlot2:
    """Linearity tag of the middle slot."""

    def test_algebraic(self):
        result = check_slot2_linearity(build_a3t(2, 2))
        assert result.passed
        assert result.detail == "linear"

    def test_physical(self):
        assert check_slot2_linearity(build_a3t_ph(2, 2, 1, 1)).detail == "antilinear"
        assert check_slot2_linearity(build_a3n(2, -1)).detail == "antilinear"

    def test_wrong_tag(self):
        T = build_a3t(2, 2)
        mislabelled = TriSystem(T.dim, "antilinear", T.bracket, "mislabelled")
        result = check_slot2_linearity(mislabelled)
        assert result.status == "fail"
        assert result.counterexample is not None

    def test_antilinearity_as_identity(self, a3n_plus):
        assert (a3n_plus.structure_i + a3n_plus.structure.times_i()).is_zero()


class TestCenterAndSimplicity:
    """Center over the realification and the invariant-subspace criterion."""

    def test_zero_bracket_center_is_everything(self):
        assert len(center(build_a3t(1, 1))) == 2
        assert not is_simple(build_a3t(1, 1))

    def test_trivial_centers(self):
        assert center(build_a3t_ph(2, 2, 0, 0)) == []
        assert center(build_c3_physicalized(2, 1)) == []

    def test_simple(self):
        assert is_simple(build_a3t_ph(2, 3, 1, 2))

    def test_direct_sum_is_not_simple(self, a3n_plus):
        doubled = direct_sum(a3n_plus, a3n_plus)
        assert doubled.dim == 8
        assert not is_simple(doubled)

    def test_float_backend_is_rejected(self):
        with pytest.raises(ValueError, match="exact"):
            center(build_a3n(2, 1, mode="float"))


class TestPhysicalize:
    """Inserting an anti-linear involution into slot 2."""

    def test_linear_map_is_rejected(self):
        with pytest.raises(ValueError, match="anti-linear"):
            physicalize(build_a3t(2, 2), ConjMap.identity(4))

    def test_non_involution_is_rejected(self):
        twist = ConjMap(CArray.diag([2, 1, 1, 1]), antilinear=True)
        with pytest.raises(ValueError, match="involution"):
            physicalize(build_a3t(2, 2), twist)

    def test_physical_input_is_rejected(self, a3n_plus):
        with pytest.raises(ValueError, match="algebraic"):
            physicalize(a3n_plus, ConjMap(CArray.identity(4), antilinear=True))


class TestScaledIso:
    """x -> lambda^(-1/2) x identifies T with its rescaling."""

    def test_rational_root(self, a3n_plus):
        result = scaled_bracket_iso_check(a3n_plus, 4)
        assert result.passed
        assert "alpha = 1/2" in result.detail

    def test_identity(self, a3n_plus):
        assert scaled_bracket_iso_check(a3n_plus, 1).passed

    def test_irrational_root_uses_floats(self, a3n_plus):
        assert scaled_bracket_iso_check(a3n_plus, 2).passed

    def test_negative_scaling_is_rejected(self, a3n_plus):
        with pytest.raises(ValueError, match="positive real"):
            scaled_bracket_iso_check(a3n_plus, -1)


class TestStructure:
    """Structure tensors determine the bracket."""

    def test_from_structure_round_trip(self, a3n_plus):
        rebuilt = TriSystem.from_structure(
            a3n_plus.structure, a3n_plus.structure_i, "antilinear", "rebuilt"
        )
        assert compare_brackets(a3n_plus, rebuilt).passed
        a = CArray.from_scalars([1, GaussRat(0, 2), 3, -1])
        b = CArray.from_scalars([GaussRat(1, 1), 0, 2, GaussRat(0, -1)])
        c = CArray.from_scalars([0, 1, GaussRat(2, 3), 1])
        assert rebuilt(a, b, c).equals(a3n_plus(a, b, c))

    def test_signs_differ(self):
        result = compare_brackets(build_a3n(2, 1), build_a3n(2, -1))
        assert result.status == "fail"
        assert result.counterexample is not None

    def test_bad_output_shape(self):
        T = TriSystem(2, "linear", lambda a, b, c: a.reshape(1, 2), "bad")
        with pytest.raises(ValueError, match="shape"):
            T.structure


class TestAxiomSuite:
    """Combined report."""

    def test_a3n_report(self, a3n_plus):
        report = run_axiom_suite(a3n_plus)
        assert report.axioms_passed()
        assert report.slot2 == "antilinear"
        assert report.center_dim_real == 0
        assert report.simple is True
        assert report.counterexample is None

    def test_float_report_skips_center(self):
        report = run_axiom_suite(build_a3n(2, 1, mode="float"))
        assert report.axioms_passed()
        assert report.center_dim_real is None
        assert report.simple is None

    def test_report_json(self, a3n_plus):
        payload = run_axiom_suite(a3n_plus, with_simple=False).model_dump()
        assert payload["antisym"] == "pass"
        assert payload["fi"] == "pass"
        assert payload["slot2"] == "antilinear"


class TestJordanAxioms:
    """Jordan 3-superalgebras with per-basis parities."""

    def test_even_scalars(self):
        def bracket(a, b, c):
            return (a.reshape(1, 1) @ b.reshape(1, 1) @ c.reshape(1, 1)).scale(2).reshape(-1)

        report = check_jordan_axioms(1, [0], bracket)
        assert report.passed
        assert report.bridge is None

    def test_odd_a3t_passes_bridge(self):
        report = check_jordan_axioms(4, [1, 1, 1, 1], build_a3t(2, 2).bracket)
        assert report.passed
        assert report.bridge == "pass"

    def test_mixed_parity_failure(self):
        rows = [[[[0, 0] for _ in range(2)] for _ in range(2)] for _ in range(2)]
        rows[0][0][1] = [1, 0]
        structure = CArray.from_scalars(rows)
        T = TriSystem.from_structure(structure, structure.times_i(), "linear", "mixed")
        report = check_jordan_axioms(2, [0, 1], T.bracket)
        assert not report.passed
        assert report.symmetry == "fail"
        assert report.counterexample is not None

    def test_bad_parity(self):
        with pytest.raises(ValueError, match="parity"):
            check_jordan_axioms(2, [0, 2], build_a3t(1, 2).bracket)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
