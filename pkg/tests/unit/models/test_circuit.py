"""Unit tests for circuit models (src.models.circuit)."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.models.circuit import (
    Distribution,
    Gate,
    GateCountReport,
    GateList,
    GateName,
    Program,
    QState,
    ReorderMode,
    StepPayload,
)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)


def test_gate_accepts_unitary_and_reports_arity() -> None:
    """A unitary 2x2 matrix makes a one-qubit gate."""
    gate = Gate(name=GateName.MATRIX, matrix=HADAMARD, targets=(3,))
    assert gate.arity == 1


def test_gate_rejects_non_unitary_matrix() -> None:
    """Non-unitary matrices fail validation."""
    with pytest.raises(ValidationError, match="not unitary"):
        Gate(name=GateName.MATRIX, matrix=np.array([[1, 1], [0, 1]], dtype=np.complex128), targets=(0,))


def test_gate_rejects_shape_mismatch() -> None:
    """The matrix size must match the number of targets."""
    with pytest.raises(ValidationError):
        Gate(name=GateName.MATRIX, matrix=HADAMARD, targets=(0, 1))


def test_gate_rejects_repeated_targets() -> None:
    """Gate targets must be distinct."""
    with pytest.raises(ValidationError, match="distinct"):
        Gate(name=GateName.MATRIX, matrix=np.eye(4, dtype=np.complex128), targets=(1, 1))


def test_program_rejects_target_beyond_register() -> None:
    """A step targeting a qubit past the register fails validation."""
    gate = Gate(name=GateName.MATRIX, matrix=HADAMARD, targets=(2,))
    with pytest.raises(ValidationError, match="out of range"):
        Program(n_qubits=2, steps=(gate,))


def test_program_may_reuse_qubits_across_steps() -> None:
    """The same qubit may appear in many steps."""
    gate = Gate(name=GateName.MATRIX, matrix=HADAMARD, targets=(0,))
    assert len(Program(n_qubits=1, steps=(gate, gate, gate)).steps) == 3


def test_qstate_requires_normalisation_and_length() -> None:
    """States must be normalised and of length 2^n."""
    with pytest.raises(ValidationError, match="normalised"):
        QState(n_qubits=1, amps=np.array([1.0, 1.0], dtype=np.complex128))
    with pytest.raises(ValidationError):
        QState(n_qubits=2, amps=np.array([1.0, 0.0], dtype=np.complex128))


def test_distribution_clamps_tiny_negatives_and_checks_sum() -> None:
    """Round-off negatives are clamped and the total must be one."""
    distribution = Distribution(probabilities={"0": 1.0 + 1e-13, "1": -1e-13})
    assert distribution.probabilities["1"] == 0.0
    with pytest.raises(ValidationError):
        Distribution(probabilities={"0": 0.5, "1": 0.4})
    with pytest.raises(ValidationError, match="negative"):
        Distribution(probabilities={"0": 1.1, "1": -0.1})


def test_step_payload_needs_exactly_one_kind() -> None:
    """A step names a gate or carries a matrix, never both or neither."""
    with pytest.raises(ValidationError):
        StepPayload(targets=[0])
    with pytest.raises(ValidationError):
        StepPayload(gate=GateName.H, matrix=[[1, 0], [0, 1]], targets=[0])
    step = StepPayload.model_validate({"matrix": [[1, 0], [0, [0.0, 1.0]]], "targets": [0]})
    assert step.matrix is not None


def test_gate_count_report_total_must_add_up() -> None:
    """The reported total must equal the sum of the gate counts."""
    with pytest.raises(ValidationError):
        GateCountReport(hadamards=3, cphases=3, swaps=0, total=7)


def test_gate_list_swaps_mode_needs_identity_permutation() -> None:
    """Swaps mode leaves no output permutation; relabel mode may."""
    with pytest.raises(ValidationError):
        GateList(n_qubits=2, gates=(), reorder_mode=ReorderMode.SWAPS, final_permutation=(1, 0))
    relabelled = GateList(n_qubits=2, gates=(), reorder_mode=ReorderMode.RELABEL, final_permutation=(1, 0))
    assert relabelled.final_permutation == (1, 0)
