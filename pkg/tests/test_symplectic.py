"""
F₂ 辛空间测试
"""

import pytest

from nikulin_check.errors import InvalidParameterError, NoSymplecticBasisError
from nikulin_check.f2 import (F2Vector, Subspace, SymplecticSpace, pair, random_symplectic_basis,
                              standard_symplectic, symplectic_basis)
from nikulin_check.f2.symplectic import is_symplectic_basis, orthogonal_complement


class TestF2Vector:
    def test_rejects_odd_dimension(self):
        with pytest.raises(InvalidParameterError):
            F2Vector(3, 0)

    def test_rejects_bits_outside_width(self):
        with pytest.raises(InvalidParameterError):
            F2Vector(2, 4)

    def test_rejects_width_over_cap(self):
        with pytest.raises(InvalidParameterError):
            F2Vector(66, 0)

    def test_addition_is_xor(self):
        assert (F2Vector(4, 0b0011) + F2Vector(4, 0b0110)).bits == 0b0101

    def test_addition_dimension_mismatch(self):
        with pytest.raises(InvalidParameterError):
            F2Vector(2, 1) + F2Vector(4, 1)

    def test_coords_round_trip(self):
        v = F2Vector.from_coords([1, 0, 1, 1])
        assert v.bits == 0b1101
        assert v.coords == (1, 0, 1, 1)

    def test_hex_width(self):
        assert F2Vector(6, 0x5).to_hex() == '05'
        assert F2Vector(2, 0).to_hex() == '0'


class TestSymplecticSpace:
    @pytest.mark.parametrize('g', [1, 2, 3, 6])
    def test_standard_space_is_nondegenerate(self, g):
        space = standard_symplectic(g)
        assert space.dim == 2 * g
        assert space.is_nondegenerate

    def test_pairing_of_standard_basis(self, space3):
        e1, e2, e3, f1, f2, f3 = space3.standard_vectors()
        assert pair(space3, e1, f1) == 1
        assert pair(space3, f1, e1) == 1
        assert pair(space3, e1, f2) == 0
        assert pair(space3, e2, e3) == 0

    def test_pairing_is_alternating(self, space3):
        assert all(pair(space3, v, v) == 0 for v in space3.vectors())

    def test_from_matrix_rejects_nonzero_diagonal(self):
        with pytest.raises(InvalidParameterError):
            SymplecticSpace.from_matrix([[1, 1], [1, 0]])

    def test_from_matrix_rejects_asymmetry(self):
        with pytest.raises(InvalidParameterError):
            SymplecticSpace.from_matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 1, 0]])

    def test_pair_rejects_wrong_dimension(self, space3):
        with pytest.raises(InvalidParameterError):
            pair(space3, F2Vector(2, 1), space3.vector(1))

    def test_standard_symplectic_range(self):
        with pytest.raises(InvalidParameterError):
            standard_symplectic(0)
        with pytest.raises(InvalidParameterError):
            standard_symplectic(33)


class TestSymplecticBasis:
    def test_standard_space_returns_standard_basis(self, space3):
        assert symplectic_basis(space3) == tuple(space3.standard_vectors())

    def test_nonstandard_gram(self):
        # 行顺序打乱后的双曲 Gram：⟨b0,b1⟩ = ⟨b2,b3⟩ = 1
        space = SymplecticSpace.from_matrix([
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ])
        basis = symplectic_basis(space)
        assert is_symplectic_basis(space, basis)
        assert [v.bits for v in basis] == [0b0001, 0b0100, 0b0010, 0b1000]

    def test_dense_degenerate_gram(self):
        space = SymplecticSpace.from_matrix([
            [0, 1, 1, 1],
            [1, 0, 1, 0],
            [1, 1, 0, 1],
            [1, 0, 1, 0],
        ])
        # 第 2、4 行相同，第 3 行是前两行之和
        assert space.rank == 2
        with pytest.raises(NoSymplecticBasisError):
            symplectic_basis(space)

    def test_degenerate_space(self):
        space = SymplecticSpace(1, (0, 0))
        with pytest.raises(NoSymplecticBasisError):
            symplectic_basis(space)

    def test_random_bases_are_symplectic(self, rng):
        space = standard_symplectic(4)
        for _ in range(20):
            assert is_symplectic_basis(space, random_symplectic_basis(space, rng))

    def test_random_bases_differ(self, rng):
        space = standard_symplectic(4)
        bases = {random_symplectic_basis(space, rng) for _ in range(10)}
        assert len(bases) > 1


class TestSubspaces:
    def test_dependent_vectors_rejected(self, space3):
        v = space3.vector(0b000011)
        with pytest.raises(InvalidParameterError):
            Subspace((v, v), space3)

    def test_lift(self, space3):
        sub = Subspace((space3.vector(0b000001), space3.vector(0b001000)), space3)
        assert sub.lift(F2Vector(2, 0b11)).bits == 0b001001

    def test_orthogonal_complement(self, space3):
        eta = space3.vector(0b000011)
        eps = space3.vector(0b001000)
        assert pair(space3, eta, eps) == 1
        perp = orthogonal_complement(space3, eta, eps)
        assert perp.dim == 4
        for v in perp.basis:
            assert pair(space3, v, eta) == 0
            assert pair(space3, v, eps) == 0
        assert perp.restricted_space().is_nondegenerate
