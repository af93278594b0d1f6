"""
F₂ 二次型、Arf 不变量与 θ-特征标计数测试
"""

import pytest

from nikulin_check.errors import (InvalidParameterError, NotHyperbolicPairError,
                                  ResourceLimitError)
from nikulin_check.f2 import (F2Vector, QuadraticForm, arf, arf_in_basis, count_forms_by_arf,
                              count_special_theta, decompose_and_restrict, enumerate_forms,
                              eval_form, even_odd_difference, form_from_values, pair,
                              polarity_violations, random_symplectic_basis, standard_symplectic,
                              translate_form, zero_count)
from nikulin_check.f2.symplectic import random_bits


def _closed_counts(g):
    return 2 ** (g - 1) * (2 ** g + 1), 2 ** (g - 1) * (2 ** g - 1)


class TestEvaluation:
    def test_polarization_on_g1(self):
        space = standard_symplectic(1)
        q = form_from_values(space, [1, 1])
        e, f = space.standard_vectors()
        assert eval_form(q, e) == 1
        assert eval_form(q, f) == 1
        assert eval_form(q, e + f) == 1
        assert eval_form(q, space.vector(0)) == 0

    def test_dimension_mismatch(self):
        q = form_from_values(standard_symplectic(2), [0, 0, 0, 0])
        with pytest.raises(InvalidParameterError):
            eval_form(q, F2Vector(2, 1))

    def test_form_from_values_length(self):
        with pytest.raises(InvalidParameterError):
            form_from_values(standard_symplectic(2), [0, 1])

    def test_hex(self):
        q = form_from_values(standard_symplectic(3), [1, 0, 0, 0, 0, 1])
        assert q.to_hex() == '21'
        assert q.basis_values == (1, 0, 0, 0, 0, 1)


class TestArf:
    @pytest.mark.parametrize('values, expected_arf, expected_zeros', [
        ([0, 0], 0, 3),
        ([1, 0], 0, 3),
        ([1, 1], 1, 1),
    ])
    def test_g1_forms(self, values, expected_arf, expected_zeros):
        q = form_from_values(standard_symplectic(1), values)
        assert arf(q) == expected_arf
        assert zero_count(q) == expected_zeros

    @pytest.mark.parametrize('g', [1, 2, 3, 4])
    def test_counts_by_arf(self, g):
        assert count_forms_by_arf(g) == _closed_counts(g)

    @pytest.mark.slow
    @pytest.mark.parametrize('g', [5, 6])
    def test_counts_by_arf_large(self, g):
        assert count_forms_by_arf(g) == _closed_counts(g)

    @pytest.mark.parametrize('g', [1, 2, 3, 4])
    def test_even_odd_difference(self, g):
        assert even_odd_difference(g) == 2 ** g

    @pytest.mark.parametrize('g', [1, 2, 3])
    def test_democratic_equivalence(self, g):
        even_zeros = 2 ** (2 * g - 1) + 2 ** (g - 1)
        for q in enumerate_forms(standard_symplectic(g)):
            assert (arf(q) == 0) == (zero_count(q) == even_zeros)

    @pytest.mark.slow
    def test_democratic_equivalence_g4(self):
        for q in enumerate_forms(standard_symplectic(4)):
            assert (arf(q) == 0) == (zero_count(q) == 136)

    def test_basis_independence(self, rng):
        space = standard_symplectic(5)
        forms = [QuadraticForm(space, random_bits(rng, space.dim)) for _ in range(6)]
        reference = [arf(q) for q in forms]
        for _ in range(100):
            basis = random_symplectic_basis(space, rng)
            assert [arf_in_basis(q, basis) for q in forms] == reference

    def test_arf_in_basis_rejects_non_symplectic(self):
        space = standard_symplectic(2)
        q = form_from_values(space, [1, 1, 0, 0])
        basis = [space.vector(1 << i) for i in range(4)]
        basis[1], basis[2] = basis[2], basis[1]
        with pytest.raises(InvalidParameterError):
            arf_in_basis(q, basis)


class TestTranslation:
    @pytest.mark.parametrize('g', [1, 2])
    def test_translate_identity(self, g):
        space = standard_symplectic(g)
        for q in enumerate_forms(space):
            for v in space.vectors():
                assert arf(translate_form(q, v)) == arf(q) ^ eval_form(q, v)

    @pytest.mark.slow
    def test_translate_identity_g3(self, space3):
        for q in enumerate_forms(space3):
            for v in space3.vectors():
                assert arf(translate_form(q, v)) == arf(q) ^ eval_form(q, v)

    @pytest.mark.parametrize('g', [1, 2, 3])
    def test_action_is_free(self, g):
        space = standard_symplectic(g)
        q = next(iter(enumerate_forms(space)))
        images = {translate_form(q, v) for v in space.vectors()}
        assert len(images) == 2 ** space.dim

    def test_translate_by_zero(self, space3):
        q = form_from_values(space3, [1, 0, 1, 0, 0, 1])
        assert translate_form(q, space3.vector(0)) == q

    def test_translated_form_is_polar(self, space3):
        q = form_from_values(space3, [0, 1, 1, 0, 1, 0])
        moved = translate_form(q, space3.vector(0b101010))
        for x in space3.vectors():
            assert eval_form(moved, x) == eval_form(q, x) ^ pair(space3, x, space3.vector(0b101010))


class TestPolarity:
    @pytest.mark.parametrize('g', [1, 2])
    def test_exhaustive_all_forms(self, g):
        for q in enumerate_forms(standard_symplectic(g)):
            assert polarity_violations(q) == 0

    @pytest.mark.parametrize('values', [0, 0x3f, 0x15])
    def test_exhaustive_g3(self, space3, values):
        assert polarity_violations(QuadraticForm(space3, values)) == 0

    @pytest.mark.slow
    def test_exhaustive_g4(self):
        space = standard_symplectic(4)
        assert polarity_violations(QuadraticForm(space, 0xa5)) == 0

    def test_sampled_g6(self, rng):
        space = standard_symplectic(6)
        q = QuadraticForm(space, random_bits(rng, space.dim))
        assert polarity_violations(q, samples=300, rng=rng) == 0

    def test_exhaustive_refuses_large_g(self):
        q = QuadraticForm(standard_symplectic(5), 0)
        with pytest.raises(ResourceLimitError):
            polarity_violations(q)

    def test_sampling_requires_rng(self, space3):
        with pytest.raises(InvalidParameterError):
            polarity_violations(QuadraticForm(space3, 0), samples=10)


class TestEnumeration:
    def test_lexicographic_order(self):
        forms = list(enumerate_forms(standard_symplectic(2)))
        keys = [q.basis_values for q in forms]
        assert len(forms) == 16
        assert keys == sorted(keys)
        assert len(set(keys)) == 16

    def test_cap_is_checked_eagerly(self):
        with pytest.raises(ResourceLimitError):
            enumerate_forms(standard_symplectic(13))

    def test_count_rejects_large_g(self):
        with pytest.raises(ResourceLimitError):
            count_forms_by_arf(13)


class TestSpecialTheta:
    @pytest.mark.parametrize('g, solutions, thetanulls', [
        (2, 2, 1),
        (3, 12, 6),
        (4, 56, 28),
    ])
    def test_beauville_counts(self, g, solutions, thetanulls):
        space = standard_symplectic(g)
        result = count_special_theta(g, space.vector(1))
        assert result.n_solutions == solutions
        assert result.n_vanishing_thetanulls == thetanulls

    @pytest.mark.slow
    @pytest.mark.parametrize('g, solutions', [(5, 240), (6, 992)])
    def test_beauville_counts_large(self, g, solutions):
        result = count_special_theta(g, standard_symplectic(g).vector(1))
        assert result.n_solutions == solutions
        assert 2 * result.n_vanishing_thetanulls == solutions

    @pytest.mark.parametrize('g', [2, 3])
    def test_independent_of_eta(self, g):
        space = standard_symplectic(g)
        expected = 2 ** (g - 1) * (2 ** (g - 1) - 1)
        for bits in range(1, 1 << space.dim):
            assert count_special_theta(g, space.vector(bits)).n_solutions == expected

    def test_zero_eta_rejected(self, space3):
        with pytest.raises(InvalidParameterError):
            count_special_theta(3, space3.vector(0))

    def test_eta_dimension_checked(self):
        with pytest.raises(InvalidParameterError):
            count_special_theta(3, F2Vector(4, 1))


class TestDecomposition:
    def test_rejects_isotropic_pair(self, space3):
        q = QuadraticForm(space3, 0)
        with pytest.raises(NotHyperbolicPairError):
            decompose_and_restrict(q, space3.vector(0b000001), space3.vector(0b000010))

    def test_dimensions(self, space3):
        q = QuadraticForm(space3, 0b110100)
        parts = decompose_and_restrict(q, space3.vector(0b000001), space3.vector(0b001000))
        assert parts.sigma.dim == 2
        assert parts.sigma_perp.dim == 4
        assert parts.q_perp.space.g == 2

    @pytest.mark.parametrize('g', [1, 2])
    def test_arf_additivity(self, g):
        space = standard_symplectic(g)
        for q in enumerate_forms(space):
            for eta in space.vectors():
                for eps in space.vectors():
                    if pair(space, eta, eps) != 1:
                        continue
                    parts = decompose_and_restrict(q, eta, eps)
                    assert arf(q) == arf(parts.q_sigma) ^ arf(parts.q_perp)

    @pytest.mark.slow
    def test_arf_additivity_g3(self, space3):
        for q in enumerate_forms(space3):
            for eta in space3.vectors():
                if eta.is_zero():
                    continue
                eps = next(v for v in space3.vectors() if pair(space3, eta, v))
                parts = decompose_and_restrict(q, eta, eps)
                assert arf(q) == arf(parts.q_sigma) ^ arf(parts.q_perp)
