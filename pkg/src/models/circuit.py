from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.settings import get_settings


class GateName(str, Enum):
    H = "H"
    X = "X"
    CNOT = "CNOT"
    SWAP = "SWAP"
    CPHASE = "CPHASE"
    MATRIX = "MATRIX"


class ReorderMode(str, Enum):
    """Como a permutação de rótulos da QFT é realizada."""

    SWAPS = "swaps"
    RELABEL = "relabel"


class Gate(BaseModel):
    """Porta de 1 ou 2 qubits: matriz unitária e qubits alvo.

    Para portas de 2 qubits a base é |q_i q_j⟩ com o PRIMEIRO alvo como bit
    mais significativo (no CNOT, o primeiro alvo é o controle).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: GateName
    matrix: np.ndarray
    targets: tuple[int, ...] = Field(..., min_length=1, max_length=2)
    param: float | None = Field(None, description="Fase do CPHASE em voltas: diag(1, 1, 1, exp(2πi·param))")

    @model_validator(mode="after")
    def validate_unitary(self) -> "Gate":
        """Valida dimensão, alvos distintos e unitariedade (tolerância unitarity_tolerance).

        Raises:
            ValueError: Matriz com formato errado, alvos repetidos/negativos ou matriz não unitária.
        """
        dimension = 1 << len(self.targets)
        if self.matrix.shape != (dimension, dimension):
            raise ValueError(f"Gate on {len(self.targets)} qubit(s) needs a {dimension}x{dimension} matrix")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"Gate targets must be distinct, got {list(self.targets)}")
        if any(t < 0 for t in self.targets):
            raise ValueError(f"Gate targets must be non-negative, got {list(self.targets)}")
        if not np.all(np.isfinite(self.matrix)):
            raise ValueError("Gate matrix has non-finite entries")
        deviation = np.max(np.abs(self.matrix @ self.matrix.conj().T - np.eye(dimension)))
        if deviation > get_settings().unitarity_tolerance:
            raise ValueError(f"Gate matrix is not unitary (max deviation {deviation:.3e})")
        return self

    @property
    def arity(self) -> int:
        return len(self.targets)


class Program(BaseModel):
    """Sequência ordenada de portas sobre n qubits."""

    model_config = ConfigDict(frozen=True)

    n_qubits: int = Field(..., ge=1)
    steps: tuple[Gate, ...] = ()

    @model_validator(mode="after")
    def validate_targets(self) -> "Program":
        for position, gate in enumerate(self.steps):
            if max(gate.targets) >= self.n_qubits:
                raise ValueError(
                    f"Step {position} targets {list(gate.targets)} out of range for {self.n_qubits} qubit(s)"
                )
        return self


class QState(BaseModel):
    """Vetor de estado de n qubits. O qubit 0 é o bit MENOS significativo do índice."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_qubits: int = Field(..., ge=1)
    amps: np.ndarray

    @model_validator(mode="after")
    def validate_normalised(self) -> "QState":
        if self.amps.shape != (1 << self.n_qubits,):
            raise ValueError(f"State of {self.n_qubits} qubit(s) needs {1 << self.n_qubits} amplitudes")
        norm = float(np.sum(np.abs(self.amps) ** 2))
        if abs(norm - 1.0) > get_settings().norm_tolerance:
            raise ValueError(f"State is not normalised (sum of |amp|^2 = {norm:.12f})")
        return self


class Distribution(BaseModel):
    """Distribuição de resultados de medida (Born)."""

    probabilities: dict[str, float]

    @field_validator("probabilities")
    @classmethod
    def validate_probabilities(cls, v: dict[str, float]) -> dict[str, float]:
        """Fixa em 0 valores ≥ probability_floor e exige soma 1.

        Raises:
            ValueError: Probabilidade abaixo do piso ou soma diferente de 1.
        """
        settings = get_settings()
        cleaned: dict[str, float] = {}
        for outcome, probability in v.items():
            if probability < settings.probability_floor:
                raise ValueError(f"Probability of outcome {outcome} is negative ({probability})")
            cleaned[outcome] = max(probability, 0.0)
        total = sum(cleaned.values())
        if abs(total - 1.0) > settings.norm_tolerance:
            raise ValueError(f"Probabilities sum to {total}, expected 1")
        return cleaned


class StepPayload(BaseModel):
    """Um passo do programa no formato JSON: porta nomeada ou matriz explícita.

    Entradas de matriz aceitam número real ou par [re, im].
    """

    gate: GateName | None = None
    matrix: list[list[float | tuple[float, float]]] | None = None
    targets: list[int] = Field(..., min_length=1, max_length=2)
    param: float | None = None

    @model_validator(mode="after")
    def validate_kind(self) -> "StepPayload":
        if (self.gate is None) == (self.matrix is None):
            raise ValueError("Each step needs exactly one of 'gate' or 'matrix'")
        if self.gate == GateName.MATRIX:
            raise ValueError("Use the 'matrix' field for explicit matrices")
        return self


class ProgramPayload(BaseModel):
    """Programa no formato JSON: {"n": int, "steps": [...]}."""

    n: int = Field(..., ge=1, description="Número de qubits")
    steps: list[StepPayload] = Field(default_factory=list)


class GateCountReport(BaseModel):
    hadamards: int = Field(..., ge=0)
    cphases: int = Field(..., ge=0)
    swaps: int = Field(..., ge=0)
    total: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_total(self) -> "GateCountReport":
        if self.total != self.hadamards + self.cphases + self.swaps:
            raise ValueError("total must equal hadamards + cphases + swaps")
        return self


class GateList(BaseModel):
    """Rede compilada da QFT.

    `final_permutation[q]` é o fio físico que carrega o qubit lógico q ao
    final da rede (identidade no modo swaps).
    """

    model_config = ConfigDict(frozen=True)

    n_qubits: int = Field(..., ge=1)
    gates: tuple[Gate, ...]
    reorder_mode: ReorderMode
    final_permutation: tuple[int, ...]

    @model_validator(mode="after")
    def validate_permutation(self) -> "GateList":
        if sorted(self.final_permutation) != list(range(self.n_qubits)):
            raise ValueError("final_permutation must be a permutation of the qubit indices")
        if self.reorder_mode == ReorderMode.SWAPS and list(self.final_permutation) != list(range(self.n_qubits)):
            raise ValueError("final_permutation must be the identity in swaps mode")
        for gate in self.gates:
            if max(gate.targets) >= self.n_qubits:
                raise ValueError(f"Gate targets {list(gate.targets)} out of range for {self.n_qubits} qubit(s)")
        return self


class SimulateResponse(BaseModel):
    """Saída do subcomando `simulate`."""

    n_qubits: int
    measure: str = Field(..., description="'all' ou o índice do qubit medido")
    distribution: dict[str, float] = Field(..., description="Probabilidades de Born por resultado")
    shots: int | None = None
    counts: dict[str, int] | None = Field(None, description="Contagens amostradas (apenas com --shots)")
    seed: int


class QFTCompileResponse(ProgramPayload):
    """Saída do subcomando `qft-compile`: o programa no formato de `simulate` e a permutação final."""

    reorder: ReorderMode
    final_permutation: list[int]
    gate_counts: GateCountReport
