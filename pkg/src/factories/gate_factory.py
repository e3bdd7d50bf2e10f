import math
from collections.abc import Sequence

import numpy as np
from pydantic import ValidationError

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.models.circuit import Gate, GateName, Program, ProgramPayload, StepPayload

FACTORY_NAME = "GateFactory"

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128)
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128)

_ARITY = {GateName.H: 1, GateName.X: 1, GateName.CNOT: 2, GateName.SWAP: 2, GateName.CPHASE: 2}


def cphase_matrix(turns: float) -> np.ndarray:
    """diag(1, 1, 1, exp(2πi·turns))."""
    return np.diag([1, 1, 1, np.exp(2j * np.pi * turns)]).astype(np.complex128)


def _build(name: GateName, matrix: np.ndarray, targets: Sequence[int], param: float | None = None) -> Gate:
    try:
        return Gate(name=name, matrix=matrix, targets=tuple(targets), param=param)
    except ValidationError as err:
        raise ApplicationServiceError(
            service_name=FACTORY_NAME,
            message=f"Invalid {name.value} gate: {err.errors()[0]['msg']}",
            error_code="INVALID_GATE",
        ) from err


@handle_service_errors_sync(service_name=FACTORY_NAME, error_code="INVALID_GATE")
def make_gate(name: GateName | str, targets: Sequence[int], param: float | None = None) -> Gate:
    """Cria uma porta da biblioteca padrão (H, X, CNOT, SWAP, CPHASE).

    Args:
        name: Nome da porta.
        targets: Qubits alvo (controle primeiro no CNOT e no CPHASE).
        param: Fase do CPHASE em voltas (obrigatória para CPHASE).

    Returns:
        Gate: Porta validada.

    Raises:
        ApplicationServiceError: Nome desconhecido, aridade errada ou parâmetro ausente.
    """
    try:
        gate_name = GateName(name)
    except ValueError as err:
        raise ApplicationServiceError(
            service_name=FACTORY_NAME,
            message=f"Unknown gate '{name}' (expected one of H, X, CNOT, SWAP, CPHASE)",
            error_code="INVALID_GATE",
        ) from err
    if gate_name == GateName.MATRIX:
        raise ApplicationServiceError(
            service_name=FACTORY_NAME,
            message="Explicit matrices go through matrix_gate",
            error_code="INVALID_GATE",
        )
    if len(targets) != _ARITY[gate_name]:
        raise ApplicationServiceError(
            service_name=FACTORY_NAME,
            message=f"Gate {gate_name.value} takes {_ARITY[gate_name]} target(s), got {len(targets)}",
            error_code="INVALID_GATE",
        )
    if gate_name == GateName.CPHASE:
        if param is None:
            raise ApplicationServiceError(
                service_name=FACTORY_NAME,
                message="CPHASE needs 'param' (phase in turns)",
                error_code="INVALID_GATE",
            )
        matrix = cphase_matrix(param)
    else:
        matrix = {GateName.H: _HADAMARD, GateName.X: _PAULI_X, GateName.CNOT: _CNOT, GateName.SWAP: _SWAP}[gate_name]
    return _build(gate_name, matrix, targets, param)


@handle_service_errors_sync(service_name=FACTORY_NAME, error_code="INVALID_GATE")
def matrix_gate(matrix: np.ndarray | Sequence[Sequence[complex]], targets: Sequence[int]) -> Gate:
    """Cria uma porta a partir de uma matriz unitária 2×2 ou 4×4 (validada com tolerância 1e-10)."""
    return _build(GateName.MATRIX, np.asarray(matrix, dtype=np.complex128), targets)


def _entry(value: float | tuple[float, float]) -> complex:
    if isinstance(value, tuple):
        return complex(value[0], value[1])
    return complex(value)


def gate_from_step(step: StepPayload) -> Gate:
    """Converte um passo JSON em Gate."""
    if step.gate is None:
        return matrix_gate([[_entry(v) for v in row] for row in step.matrix or []], step.targets)
    return make_gate(step.gate, step.targets, step.param)


def step_from_gate(gate: Gate) -> StepPayload:
    """Converte uma Gate em passo JSON (portas nomeadas preservam nome e parâmetro)."""
    if gate.name == GateName.MATRIX:
        rows = [[(float(z.real), float(z.imag)) for z in row] for row in gate.matrix]
        return StepPayload(matrix=rows, targets=list(gate.targets))
    return StepPayload(gate=gate.name, targets=list(gate.targets), param=gate.param)


@handle_service_errors_sync(service_name=FACTORY_NAME, error_code="INVALID_GATE")
def program_from_payload(payload: ProgramPayload) -> Program:
    """Constrói o Program validado a partir do JSON de entrada."""
    for position, step in enumerate(payload.steps):
        if any(not 0 <= t < payload.n for t in step.targets):
            raise ApplicationServiceError(
                service_name=FACTORY_NAME,
                message=f"Step {position} targets {step.targets} out of range for {payload.n} qubit(s)",
                error_code="QUBIT_OUT_OF_RANGE",
            )
    return Program(n_qubits=payload.n, steps=tuple(gate_from_step(step) for step in payload.steps))


@handle_service_errors_sync(service_name=FACTORY_NAME, error_code="INVALID_GATE")
def program_from_pairs(n_qubits: int, gate_matrix: np.ndarray, pairs: Sequence[tuple[int, int]]) -> Program:
    """Processo sequencial: a mesma porta U de 2 qubits aplicada aos pares (i_k, j_k)."""
    return Program(n_qubits=n_qubits, steps=tuple(matrix_gate(gate_matrix, pair) for pair in pairs))
