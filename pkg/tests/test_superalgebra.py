"""Tests for graded Lie superalgebras and their conjugations."""

import pytest

from src.n6_algebra.scalars import CArray, ConjMap
from src.n6_algebra.superalgebra import (
    GradedLieSuper,
    build_conj_osp,
    build_conj_psl,
    build_osp_2_2n,
    build_psl,
    build_sigma_tilde_1,
    build_tau,
    check_graded_conjugation,
    check_short_grading,
    check_span_property,
    check_super_jacobi,
    is_simple_super,
    supercommutator,
)


@pytest.fixture(scope="module")
def psl22():
    return build_psl(2, 2)


@pytest.fixture(scope="module")
def sl12():
    return build_psl(1, 2)


@pytest.fixture(scope="module")
def osp22():
    return build_osp_2_2n(1)


class TestBuilders:
    """Matrix realizations and their gradings."""

    def test_supercommutator_odd_pair(self):
        X = CArray.exact([[0, 1], [0, 0]])
        Y = CArray.exact([[0, 0], [1, 0]])
        assert supercommutator(X, Y, 1, 1).equals(CArray.identity(2))
        assert supercommutator(X, Y, 0, 1).equals(CArray.diag([1, -1]))

    def test_sl12_dims(self, sl12):
        assert sl12.dims == (2, 4, 2)
        assert sl12.dim == 8

    def test_psl22_dims(self, psl22):
        assert psl22.dims == (4, 6, 4)

    @pytest.mark.parametrize("n,dims", [(1, (2, 4, 2)), (2, (4, 11, 4))])
    def test_osp_dims(self, n, dims):
        assert build_osp_2_2n(n).dims == dims

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            build_psl(0, 2)
        with pytest.raises(ValueError):
            build_osp_2_2n(0)

    def test_odd_odd_bracket_is_even(self, sl12):
        low, high = sl12.component(-1), sl12.component(1)
        bracket = sl12.bracket(sl12.basis(low[0]), sl12.basis(high[0]))
        assert not bracket.is_zero()
        assert all(bracket[k] == 0 for k in low + high)

    def test_to_json(self, sl12):
        payload = sl12.to_json()
        assert payload["dim"] == 8
        assert payload["degree"][:2] == [-1, -1]
        assert payload["structure"]


class TestAxioms:
    """Super-Jacobi, grading and the span property."""

    @pytest.mark.parametrize("builder", [lambda: build_psl(1, 2), lambda: build_psl(2, 2)])
    def test_psl_super_jacobi(self, builder):
        g = builder()
        assert check_super_jacobi(g).passed
        assert check_short_grading(g).passed
        assert check_span_property(g).passed

    def test_osp_axioms(self, osp22):
        assert check_super_jacobi(osp22).passed
        assert check_short_grading(osp22).passed
        assert check_span_property(osp22).passed

    def test_even_parities_break_anticommutativity(self, sl12):
        broken = GradedLieSuper("broken", [0] * sl12.dim, sl12.degree, sl12.structure)
        result = check_super_jacobi(broken)
        assert not result.passed
        assert result.counterexample.check == "super_antisym"

    def test_bad_parity_fails_grading(self, sl12):
        parity = [0] + sl12.parity[1:]
        broken = GradedLieSuper("broken", parity, sl12.degree, sl12.structure)
        assert not check_short_grading(broken).passed

    def test_simplicity(self, psl22, osp22):
        assert is_simple_super(psl22)
        assert is_simple_super(osp22)


class TestConjugations:
    """Graded conjugations on psl and osp."""

    def test_sigma_tilde_1(self, sl12):
        assert check_graded_conjugation(sl12, build_sigma_tilde_1(sl12)).passed

    @pytest.mark.parametrize("sign", [1, -1])
    def test_tau(self, psl22, sign):
        report = check_graded_conjugation(psl22, build_tau(2, sign, psl22))
        assert report.passed
        assert report.antilinear

    @pytest.mark.parametrize("m,n,p,q", [(1, 2, 0, 0), (1, 2, 1, 2), (2, 2, 1, 1)])
    def test_conj_psl(self, m, n, p, q):
        g = build_psl(m, n)
        assert check_graded_conjugation(g, build_conj_psl(m, n, p, q, g)).passed

    def test_conj_psl_range(self):
        with pytest.raises(ValueError, match="0 <= p"):
            build_conj_psl(1, 2, 2, 0)

    @pytest.mark.parametrize("sign", [1, -1])
    def test_conj_osp_hermitian(self, osp22, sign):
        conj = build_conj_osp(1, "hermitian", sign, p=1, g=osp22)
        assert check_graded_conjugation(osp22, conj).passed

    def test_conj_osp_antihermitian(self, osp22):
        conj = build_conj_osp(1, "antihermitian", -1, g=osp22)
        assert check_graded_conjugation(osp22, conj).passed

    def test_conj_osp_needs_symplectic(self):
        with pytest.raises(ValueError, match="symplectic"):
            build_conj_osp(1, "hermitian", 1, H=CArray.diag([2, 1]))

    def test_conj_osp_unknown_variant(self):
        with pytest.raises(ValueError, match="Unsupported"):
            build_conj_osp(1, "orthogonal")

    def test_identity_is_not_a_conjugation(self, sl12):
        report = check_graded_conjugation(sl12, ConjMap.identity(sl12.dim))
        assert not report.passed
        assert report.degree_reversal == "fail"

    def test_shape_mismatch(self, sl12):
        with pytest.raises(ValueError, match="does not act"):
            check_graded_conjugation(sl12, ConjMap.identity(3))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
