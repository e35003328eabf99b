"""Tests for tel, Lie T and the round trip between them."""

from dataclasses import replace

import numpy as np
import pytest

from src.n6_algebra.matrix_families import (
    build_a3n,
    build_a3t,
    build_a3t_ph,
    build_c3_H_alpha,
    build_c3_is,
)
from src.n6_algebra.scalars import CArray, ConjMap, make_H
from src.n6_algebra.superalgebra import (
    GradedConj,
    build_conj_osp,
    build_conj_psl,
    build_osp_2_2n,
    build_psl,
    build_tau,
    check_graded_conjugation,
    is_simple_super,
)
from src.n6_algebra.three_algebra import (
    NonZeroCenterError,
    compare_brackets,
    is_simple,
    run_axiom_suite,
)
from src.n6_algebra.tower import (
    check_tower_axioms,
    lie_of,
    roundtrip_check,
    tel,
)


@pytest.fixture(scope="module")
def a3n_plus_tower():
    return lie_of(build_a3n(2, 1))


class TestTel:
    """3-algebras read off graded superalgebras."""

    def test_psl22_tau_plus(self):
        g = build_psl(2, 2)
        T = tel(g, build_tau(2, 1, g))
        assert T.dim == 4
        assert T.slot2 == "antilinear"
        assert compare_brackets(T, build_a3n(2, 1)).passed

    def test_psl22_tau_minus(self):
        g = build_psl(2, 2)
        assert compare_brackets(tel(g, build_tau(2, -1, g)), build_a3n(2, -1)).passed

    def test_tel_passes_axiom_suite(self):
        g = build_psl(2, 2)
        report = run_axiom_suite(tel(g, build_tau(2, 1, g)), with_simple=False)
        assert report.axioms_passed()
        assert report.slot2 == "antilinear"

    def test_sl12_matches_a3t_ph(self):
        g = build_psl(1, 2)
        T = tel(g, build_conj_psl(1, 2, 1, 2, g))
        assert compare_brackets(T, build_a3t_ph(2, 1, 1, 2)).passed

    @pytest.mark.parametrize("sign", [1, -1])
    def test_osp_hermitian(self, sign):
        g = build_osp_2_2n(1)
        T = tel(g, build_conj_osp(1, "hermitian", sign, p=1, g=g))
        assert compare_brackets(T, build_c3_H_alpha(2, make_H(2, 1), sign)).passed

    def test_osp_antihermitian(self):
        g = build_osp_2_2n(1)
        T = tel(g, build_conj_osp(1, "antihermitian", 1, g=g))
        assert compare_brackets(T, build_c3_is(2, 1)).passed

    def test_first_and_third_slots_anticommute(self):
        g = build_psl(1, 2)
        T = tel(g, build_conj_psl(1, 2, 1, 2, g))
        u = CArray.exact([1, 2])
        v = CArray.exact([0, 1], [1, 0])
        assert T(u, v, u).is_zero()

    def test_rejects_linear_map(self):
        g = build_psl(1, 2)
        with pytest.raises(ValueError, match="anti-linear"):
            tel(g, GradedConj(ConjMap.identity(g.dim), "identity", "id"))

    def test_rejects_non_conjugation(self):
        g = build_psl(1, 2)
        bogus = GradedConj(ConjMap(CArray.identity(g.dim), True), "bar", "conj")
        with pytest.raises(ValueError, match="not a graded conjugation"):
            tel(g, bogus)


class TestLieOf:
    """Lie T from a physical 3-algebra."""

    def test_a3n_dims(self, a3n_plus_tower):
        assert a3n_plus_tower.dims == (4, 6, 4)
        assert len(a3n_plus_tower.lie0_generators) == 6

    def test_a3t_ph_c0_dims(self):
        tower = lie_of(build_a3t_ph(1, 2, 0, 0))
        assert tower.dims == (2, 4, 2)
        assert tower.lie.dim == 8

    def test_a3t_ph_c11_dim(self):
        assert lie_of(build_a3t_ph(2, 2, 1, 1)).lie.dim == 14

    def test_nonzero_center(self):
        with pytest.raises(NonZeroCenterError) as info:
            lie_of(build_a3t(1, 1))
        assert len(info.value.basis) == 2

    def test_sigma_is_graded_conjugation(self, a3n_plus_tower):
        report = check_graded_conjugation(a3n_plus_tower.lie, a3n_plus_tower.sigma)
        assert report.passed

    def test_simple_iff_simple(self, a3n_plus_tower):
        assert is_simple(build_a3n(2, 1))
        assert is_simple_super(a3n_plus_tower.lie)

    def test_to_json(self, a3n_plus_tower):
        payload = a3n_plus_tower.to_json()
        assert payload["dims"] == [4, 6, 4]
        assert payload["embedding"]["minus_one"] == [0, 1, 2, 3]
        assert payload["sigma"]["antilinear"] is True


class TestRoundtrip:
    """tel(Lie T) = T."""

    @pytest.mark.parametrize(
        "builder",
        [
            lambda: build_a3n(2, -1),
            lambda: build_c3_is(2, 1),
            lambda: build_a3t_ph(1, 2, 1, 1),
        ],
    )
    def test_roundtrip(self, builder):
        result = roundtrip_check(builder())
        assert result.passed
        assert result.name == "roundtrip"


class TestTowerAxioms:
    """Full verdict on a tower."""

    def test_a3n_tower(self, a3n_plus_tower):
        report = check_tower_axioms(a3n_plus_tower)
        assert report.passed
        assert report.dims == (4, 6, 4)
        assert report.roundtrip == "pass"

    def test_c3_tower_dims(self):
        tower = lie_of(build_c3_H_alpha(4, make_H(4, 2), 1))
        report = check_tower_axioms(tower, with_roundtrip=False)
        assert report.dims == (4, 11, 4)
        assert report.passed

    def test_sigma_negated_on_even_part_fails(self, a3n_plus_tower):
        signs = np.array([-1 if k == 0 else 1 for k in a3n_plus_tower.lie.degree])
        mutated = ConjMap(a3n_plus_tower.sigma.map.mat.multiply_int(signs[:, None]), True)
        tower = replace(a3n_plus_tower, sigma=GradedConj(mutated, "mutated", "-sigma on g_0"))
        report = check_tower_axioms(tower, with_roundtrip=False)
        assert report.conjugation == "fail"
        assert not report.passed


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
