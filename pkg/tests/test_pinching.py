"""Pinching and twirling maps and the identity between them.

The pinch-equals-twirl identity is checked both on hand-computed examples
(diagonal dephasing) and on seeded random families.
"""

import numpy as np
import pytest

from qchrom.errors import DimensionError, FamilyValidationError
from qchrom.pinching import (
    ProjectorFamily,
    annihilates,
    annihilation_residual,
    pinch,
    random_family,
    twirl,
    twirling_unitary,
)


def standard_basis_family(dim: int) -> ProjectorFamily:
    return ProjectorFamily(tuple(
        np.diag([1.0 + 0j if i == k else 0j for i in range(dim)]) for k in range(dim)
    ))


def random_matrix(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


class TestFamilyValidation:
    def test_empty_rejected(self):
        with pytest.raises(FamilyValidationError):
            ProjectorFamily(())

    def test_non_hermitian_rejected(self):
        q = np.array([[1.0, 1.0], [0.0, 0.0]])
        with pytest.raises(FamilyValidationError, match="Hermitian"):
            ProjectorFamily((q, np.eye(2) - q))

    def test_non_idempotent_rejected(self):
        with pytest.raises(FamilyValidationError, match="idempotent"):
            ProjectorFamily((0.5 * np.eye(2), 0.5 * np.eye(2)))

    def test_incomplete_rejected(self):
        q = np.diag([1.0, 0.0])
        with pytest.raises(FamilyValidationError, match="identity"):
            ProjectorFamily((q,))

    def test_mismatched_orders_rejected(self):
        with pytest.raises(DimensionError):
            ProjectorFamily((np.eye(2), np.eye(3)))

    def test_tol_is_respected(self):
        q = np.diag([1.0 + 5e-3, 0.0])
        with pytest.raises(FamilyValidationError):
            ProjectorFamily((q, np.eye(2) - q))
        loose = ProjectorFamily((q, np.eye(2) - q), tol=1e-1)
        assert loose.c == 2

    def test_projectors_immutable(self):
        f = standard_basis_family(2)
        with pytest.raises(ValueError):
            f.projectors[0][0, 0] = 7.0


class TestPinch:
    def test_trivial_family_is_identity_map(self):
        f = ProjectorFamily((np.eye(3),))
        x = random_matrix(3, 0)
        assert np.allclose(pinch(f, x), x)

    def test_basis_family_dephases(self):
        f = standard_basis_family(4)
        x = random_matrix(4, 1)
        assert np.allclose(pinch(f, x), np.diag(np.diag(x)))

    def test_block_family_keeps_diagonal_blocks(self):
        q1 = np.diag([1.0, 1.0, 0.0]).astype(complex)
        q2 = np.diag([0.0, 0.0, 1.0]).astype(complex)
        f = ProjectorFamily((q1, q2))
        x = random_matrix(3, 2)
        got = pinch(f, x)
        assert np.allclose(got[:2, :2], x[:2, :2])
        assert got[2, 2] == pytest.approx(x[2, 2])
        assert np.allclose(got[:2, 2], 0) and np.allclose(got[2, :2], 0)

    def test_linear_unital_trace_preserving_contraction(self):
        f = random_family(6, 3, seed=5)
        x, y = random_matrix(6, 3), random_matrix(6, 4)
        assert np.allclose(pinch(f, 2 * x + y), 2 * pinch(f, x) + pinch(f, y))
        assert np.allclose(pinch(f, np.eye(6)), np.eye(6))
        assert np.trace(pinch(f, x)) == pytest.approx(np.trace(x))
        assert np.linalg.norm(pinch(f, x)) <= np.linalg.norm(x) + 1e-12

    def test_idempotent_as_map(self):
        f = random_family(5, 2, seed=6)
        x = random_matrix(5, 7)
        once = pinch(f, x)
        assert np.allclose(pinch(f, once), once)

    def test_dimension_mismatch(self):
        f = standard_basis_family(3)
        with pytest.raises(DimensionError):
            pinch(f, np.eye(4))


class TestTwirl:
    def test_unitary_properties(self):
        f = random_family(6, 4, seed=8)
        u = twirling_unitary(f)
        assert u.c == 4
        assert np.allclose(u.u @ u.u.conj().T, np.eye(6))
        assert np.allclose(np.linalg.matrix_power(u.u, 4), np.eye(6))

    def test_c_equal_one_twirl_is_identity_map(self):
        f = ProjectorFamily((np.eye(4),))
        u = twirling_unitary(f)
        x = random_matrix(4, 9)
        assert np.allclose(twirl(u, x), x)

    def test_pinch_equals_twirl_hand_example(self):
        # rank-1 diagonal family on dim 2: both maps kill the off-diagonal
        f = standard_basis_family(2)
        u = twirling_unitary(f)
        x = np.array([[1.0, 5.0], [7.0, -2.0]], dtype=complex)
        assert np.allclose(pinch(f, x), np.diag([1.0, -2.0]))
        assert np.allclose(twirl(u, x), np.diag([1.0, -2.0]))

    def test_pinch_equals_twirl_random(self):
        rng = np.random.default_rng(77)
        for trial in range(25):
            dim = int(rng.integers(2, 13))
            c = int(rng.integers(1, dim + 1))
            f = random_family(dim, c, seed=1000 + trial)
            u = twirling_unitary(f)
            x = random_matrix(dim, 2000 + trial)
            res = np.linalg.norm(pinch(f, x) - twirl(u, x))
            assert res <= 1e-8 * (1.0 + np.linalg.norm(x))

    def test_commuting_operand_is_fixed(self):
        f = random_family(5, 3, seed=11)
        # an operand built from the projectors commutes with U: twirl fixes it
        x = 2.0 * f.projectors[0] + 3.0 * f.projectors[2]
        u = twirling_unitary(f)
        assert np.allclose(twirl(u, x), x)
        assert np.allclose(pinch(f, x), x)


class TestAnnihilation:
    def test_offdiagonal_annihilated_by_basis_family(self):
        f = standard_basis_family(3)
        x = np.array([[0, 1, 0], [1, 0, 2], [0, 2, 0]], dtype=complex)
        assert annihilation_residual(f, x) == pytest.approx(0.0, abs=1e-14)
        assert annihilates(f, x)

    def test_diagonal_not_annihilated(self):
        f = standard_basis_family(3)
        assert not annihilates(f, np.eye(3))

    def test_residual_matches_norm_of_pinch(self):
        f = random_family(6, 2, seed=13)
        x = random_matrix(6, 14)
        assert annihilation_residual(f, x) == pytest.approx(np.linalg.norm(pinch(f, x)))


class TestRandomFamily:
    def test_deterministic(self):
        a = random_family(8, 3, seed=21)
        b = random_family(8, 3, seed=21)
        for p, q in zip(a.projectors, b.projectors):
            assert np.array_equal(p, q)

    def test_nonempty_groups_sum_to_dim(self):
        f = random_family(9, 4, seed=22)
        ranks = [int(round(np.trace(p).real)) for p in f.projectors]
        assert all(r >= 1 for r in ranks)
        assert sum(ranks) == 9

    def test_too_many_groups_rejected(self):
        with pytest.raises(DimensionError):
            random_family(3, 4, seed=0)
