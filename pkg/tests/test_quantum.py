"""Tests for states, bases, tensor products, and Born probabilities."""

from __future__ import annotations

import math

import numpy as np
import pytest

from hardycheck import (
    IDENTITY_TOL,
    MeasurementBasis,
    Outcome,
    Qubit2Vector,
    Setting,
    StateVector,
    ValidationError,
    born_joint_probability,
    inner_product,
    tensor_product,
    validate_basis,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)

KET0 = np.array([1.0, 0.0])
KET1 = np.array([0.0, 1.0])


def computational_basis(label: Setting, plus_is_zero: bool = True) -> MeasurementBasis:
    plus, minus = (KET0, KET1) if plus_is_zero else (KET1, KET0)
    return MeasurementBasis(plus=plus, minus=minus, label=label)


def random_state(rng: np.random.Generator) -> StateVector:
    raw = rng.normal(size=4) + 1j * rng.normal(size=4)
    return StateVector.normalized(raw)


def random_basis(rng: np.random.Generator, label: Setting) -> MeasurementBasis:
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    return MeasurementBasis(plus=q[:, 0], minus=q[:, 1], label=label)


class TestTensorProduct:
    def test_basis_case(self) -> None:
        assert np.allclose(tensor_product(KET0, KET0), [1, 0, 0, 0])

    def test_superposition_with_ket1(self) -> None:
        plus_state = np.array([INV_SQRT2, INV_SQRT2])
        expected = [0.0, INV_SQRT2, 0.0, INV_SQRT2]
        assert np.allclose(tensor_product(plus_state, KET1), expected, atol=1e-15)

    def test_component_layout_left_slow(self) -> None:
        out = tensor_product(np.array([2.0, 3.0]), np.array([5.0, 7.0]))
        assert np.allclose(out, [10.0, 14.0, 15.0, 21.0])

    def test_norm_multiplicativity_random(self) -> None:
        rng = np.random.default_rng(20240811)
        for _ in range(200):
            a = rng.normal(size=2) + 1j * rng.normal(size=2)
            b = rng.normal(size=2) + 1j * rng.normal(size=2)
            product_norm = np.linalg.norm(tensor_product(a, b))
            assert product_norm == pytest.approx(np.linalg.norm(a) * np.linalg.norm(b), abs=IDENTITY_TOL)

    def test_accepts_wrapper_type(self) -> None:
        wrapped = Qubit2Vector(KET0)
        assert np.allclose(tensor_product(wrapped, wrapped), [1, 0, 0, 0])


class TestInnerProduct:
    def test_self_overlap_is_one(self) -> None:
        e0 = np.array([1, 0, 0, 0], dtype=complex)
        assert inner_product(e0, e0) == pytest.approx(1.0)

    def test_orthogonality(self) -> None:
        e0 = np.array([1, 0, 0, 0], dtype=complex)
        e1 = np.array([0, 1, 0, 0], dtype=complex)
        assert inner_product(e0, e1) == pytest.approx(0.0)

    def test_conjugate_linear_in_first_argument(self) -> None:
        rng = np.random.default_rng(7)
        x = rng.normal(size=4) + 1j * rng.normal(size=4)
        y = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert inner_product(1j * x, y) == pytest.approx(-1j * inner_product(x, y))
        assert inner_product(x, 1j * y) == pytest.approx(1j * inner_product(x, y))

    def test_self_inner_product_real_nonnegative(self) -> None:
        rng = np.random.default_rng(11)
        x = rng.normal(size=4) + 1j * rng.normal(size=4)
        value = inner_product(x, x)
        assert value.imag == pytest.approx(0.0, abs=1e-12)
        assert value.real >= 0.0

    def test_length_mismatch_rejected(self) -> None:
        with pytest.raises(ValidationError):
            inner_product(np.zeros(2), np.zeros(4))


class TestBornRule:
    def test_definite_product_state(self) -> None:
        state = StateVector(np.array([1, 0, 0, 0], dtype=complex))
        left = computational_basis(Setting.L1)
        right = computational_basis(Setting.R1)
        assert born_joint_probability(state, left, Outcome.PLUS, right, Outcome.PLUS) == pytest.approx(1.0)
        assert born_joint_probability(state, left, Outcome.MINUS, right, Outcome.PLUS) == pytest.approx(0.0)

    def test_bell_state_correlations(self) -> None:
        state = StateVector(np.array([INV_SQRT2, 0, 0, INV_SQRT2], dtype=complex))
        left = computational_basis(Setting.L1)
        right = computational_basis(Setting.R1)
        assert born_joint_probability(state, left, Outcome.PLUS, right, Outcome.PLUS) == pytest.approx(0.5)
        assert born_joint_probability(state, left, Outcome.MINUS, right, Outcome.MINUS) == pytest.approx(0.5)
        assert born_joint_probability(state, left, Outcome.PLUS, right, Outcome.MINUS) == pytest.approx(0.0)

    def test_hardy_configuration_zero_entry(self) -> None:
        """The (L2-, R2+) joint event of the built configuration is forbidden."""
        from hardycheck import build_hardy_configuration

        config = build_hardy_configuration(math.pi / 6)
        p = born_joint_probability(
            config.state, config.basis(Setting.L2), Outcome.MINUS, config.basis(Setting.R2), Outcome.PLUS
        )
        assert p < 1e-10

    def test_outcome_probabilities_sum_to_one(self) -> None:
        rng = np.random.default_rng(20240812)
        for _ in range(50):
            state = random_state(rng)
            left = random_basis(rng, Setting.L1)
            right = random_basis(rng, Setting.R2)
            total = sum(
                born_joint_probability(state, left, ol, right, orr)
                for ol in (Outcome.PLUS, Outcome.MINUS)
                for orr in (Outcome.PLUS, Outcome.MINUS)
            )
            assert total == pytest.approx(1.0, abs=IDENTITY_TOL)

    def test_global_phase_invariance(self) -> None:
        rng = np.random.default_rng(99)
        state = random_state(rng)
        left = random_basis(rng, Setting.L1)
        right = random_basis(rng, Setting.R1)
        for phase in (0.3, 1.7, -2.2):
            rotated = StateVector(np.exp(1j * phase) * state.components)
            for ol in (Outcome.PLUS, Outcome.MINUS):
                for orr in (Outcome.PLUS, Outcome.MINUS):
                    p0 = born_joint_probability(state, left, ol, right, orr)
                    p1 = born_joint_probability(rotated, left, ol, right, orr)
                    assert p1 == pytest.approx(p0, abs=IDENTITY_TOL)

    def test_rejects_non_normalized_state(self) -> None:
        bad = np.array([1.001, 0, 0, 0], dtype=complex)
        basis = computational_basis(Setting.L1)
        with pytest.raises(ValidationError, match="norm"):
            born_joint_probability(bad, basis, Outcome.PLUS, computational_basis(Setting.R1), Outcome.PLUS)

    def test_rejects_non_orthonormal_basis(self) -> None:
        state = StateVector(np.array([1, 0, 0, 0], dtype=complex))
        degenerate = MeasurementBasis(plus=KET0, minus=KET0, label=Setting.L1)
        with pytest.raises(ValidationError, match="orthonormal"):
            born_joint_probability(state, degenerate, Outcome.PLUS, computational_basis(Setting.R1), Outcome.PLUS)


class TestValidateBasis:
    def test_computational_basis_passes(self) -> None:
        report = validate_basis(computational_basis(Setting.L1))
        assert report.passed
        assert report.failures == ()

    def test_repeated_vector_fails_orthogonality(self) -> None:
        report = validate_basis(MeasurementBasis(plus=KET0, minus=KET0, label=Setting.L2))
        assert not report.passed
        assert report.overlap == pytest.approx(1.0)

    def test_unnormalized_vector_fails(self) -> None:
        report = validate_basis(MeasurementBasis(plus=2 * KET0, minus=KET1, label=Setting.R1))
        assert not report.passed
        assert report.plus_norm_error == pytest.approx(3.0)

    def test_tolerance_controls_verdict(self) -> None:
        skewed = MeasurementBasis(plus=np.array([1.0, 1e-8]), minus=np.array([0.0, 1.0]), label=Setting.R2)
        assert not validate_basis(skewed, tol=1e-12).passed
        assert validate_basis(skewed, tol=1e-6).passed


class TestTypeInvariants:
    def test_state_vector_rejects_non_unit(self) -> None:
        with pytest.raises(ValidationError):
            StateVector(np.array([1.1, 0, 0, 0], dtype=complex))

    def test_state_vector_rejects_nan(self) -> None:
        with pytest.raises(ValidationError):
            StateVector(np.array([np.nan, 0, 0, 0], dtype=complex))

    def test_qubit_vector_rejects_infinity(self) -> None:
        with pytest.raises(ValidationError):
            Qubit2Vector(np.array([np.inf, 0.0]))

    def test_normalized_constructor(self) -> None:
        state = StateVector.normalized(np.array([3.0, 0.0, 0.0, 4.0]))
        assert state.norm_squared() == pytest.approx(1.0, abs=IDENTITY_TOL)
        with pytest.raises(ValidationError):
            StateVector.normalized(np.zeros(4))

    def test_components_are_read_only(self) -> None:
        state = StateVector(np.array([1, 0, 0, 0], dtype=complex))
        with pytest.raises(ValueError):
            state.components[0] = 0.0

    def test_basis_vector_lookup(self) -> None:
        basis = computational_basis(Setting.L1)
        assert np.allclose(basis.vector_for(Outcome.PLUS).components, KET0)
        assert np.allclose(basis.vector_for(Outcome.MINUS).components, KET1)

    def test_setting_side_and_index(self) -> None:
        assert Setting.L2.side == "L"
        assert Setting.L2.index == 2
        assert Setting.R1.side == "R"
        assert [s.value for s in Setting] == ["L1", "L2", "R1", "R2"]
