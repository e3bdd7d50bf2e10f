from collections.abc import Sequence

import numpy as np

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.models.circuit import Distribution, Gate, Program, QState
from src.utils.logger import get_logger

logger = get_logger(__name__)


def apply_matrix(amps: np.ndarray, n_qubits: int, matrix: np.ndarray, targets: Sequence[int]) -> np.ndarray:
    """Aplica uma matriz de 1 ou 2 qubits a amplitudes (2^n, *lote).

    O vetor é visto como tensor (2, …, 2) com o qubit q no eixo n − 1 − q; a
    matriz age sobre os eixos alvo para cada combinação dos demais índices
    (2^{n−k} multiplicações de k-vetores com passo fixo).
    """
    batch = amps.shape[1:]
    tensor = amps.reshape((2,) * n_qubits + batch)
    axes = [n_qubits - 1 - t for t in targets]
    arity = len(targets)
    operator = matrix.reshape((2,) * (2 * arity))
    contracted = np.tensordot(operator, tensor, axes=(list(range(arity, 2 * arity)), axes))
    return np.moveaxis(contracted, list(range(arity)), axes).reshape(amps.shape)


def outcome_keys(n_qubits: int, qubits: Sequence[int]) -> np.ndarray:
    """Para cada índice de amplitude, o valor dos bits escolhidos (o primeiro qubit da lista é o mais significativo)."""
    everything = np.arange(1 << n_qubits, dtype=np.int64)
    keys = np.zeros_like(everything)
    for qubit in qubits:
        keys = (keys << 1) | ((everything >> qubit) & 1)
    return keys


class SimulatorService:
    """Simulador de vetor de estado para n qubits (qubit 0 = bit menos significativo)."""

    SERVICE_NAME = "SimulatorService"

    def _require_qubit(self, n_qubits: int, qubit: int) -> None:
        if not 0 <= qubit < n_qubits:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Qubit {qubit} out of range for {n_qubits} qubit(s)",
                error_code="QUBIT_OUT_OF_RANGE",
            )

    def _require_targets(self, state: QState, gate: Gate, targets: Sequence[int], arity: int) -> None:
        if gate.arity != arity or len(targets) != arity:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Expected a {arity}-qubit gate and {arity} target(s), got {gate.arity} and {len(targets)}",
                error_code="INVALID_GATE",
            )
        if len(set(targets)) != len(targets):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Two-qubit gate targets must differ, got {list(targets)}",
                error_code="QUBIT_OUT_OF_RANGE",
            )
        for target in targets:
            self._require_qubit(state.n_qubits, target)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def new_state(self, n_qubits: int) -> QState:
        """Estado |0…0⟩.

        Raises:
            ApplicationServiceError: Se n estiver fora de [1, max_qubits].
        """
        cap = get_settings().max_qubits
        if not 1 <= n_qubits <= cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Number of qubits must be between 1 and {cap}, got {n_qubits}",
                error_code="QUBIT_OUT_OF_RANGE",
            )
        amps = np.zeros(1 << n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return QState(n_qubits=n_qubits, amps=amps)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def state_from_amplitudes(self, amps: np.ndarray) -> QState:
        """Carrega um vetor de amplitudes normalizado como estado."""
        arr = np.asarray(amps, dtype=np.complex128).reshape(-1)
        n_qubits = arr.size.bit_length() - 1
        if arr.size < 2 or arr.size != 1 << n_qubits:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"State length {arr.size} is not a power of two >= 2",
                error_code="NOT_POWER_OF_TWO",
            )
        if n_qubits > get_settings().max_qubits:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"State of {n_qubits} qubits exceeds the cap {get_settings().max_qubits}",
                error_code="QUBIT_OUT_OF_RANGE",
            )
        return QState(n_qubits=n_qubits, amps=arr.copy())

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_GATE")
    def apply_1q(self, state: QState, gate: Gate, target: int) -> QState:
        """a'_{…i_t…} = Σ_j U_{i_t j} a_{…j…}: a matriz 2×2 age em cada par de amplitudes do qubit alvo."""
        self._require_targets(state, gate, [target], arity=1)
        return QState(n_qubits=state.n_qubits, amps=apply_matrix(state.amps, state.n_qubits, gate.matrix, [target]))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_GATE")
    def apply_2q(self, state: QState, gate: Gate, first: int, second: int) -> QState:
        """Porta 4×4 na base |q_first q_second⟩ (q_first mais significativo)."""
        self._require_targets(state, gate, [first, second], arity=2)
        amps = apply_matrix(state.amps, state.n_qubits, gate.matrix, [first, second])
        return QState(n_qubits=state.n_qubits, amps=amps)

    def apply_gate(self, state: QState, gate: Gate) -> QState:
        """Aplica a porta nos seus próprios alvos."""
        if gate.arity == 1:
            return self.apply_1q(state, gate, gate.targets[0])
        return self.apply_2q(state, gate, gate.targets[0], gate.targets[1])

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_GATE")
    def apply_program(self, state: QState, program: Program) -> QState:
        """Executa o programa a partir de um estado arbitrário."""
        if program.n_qubits != state.n_qubits:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Program acts on {program.n_qubits} qubit(s), state has {state.n_qubits}",
                error_code="QUBIT_OUT_OF_RANGE",
            )
        amps = state.amps
        for gate in program.steps:
            amps = apply_matrix(amps, state.n_qubits, gate.matrix, gate.targets)
        logger.debug("Program applied", operation="apply_program", n_qubits=state.n_qubits, steps=len(program.steps))
        return QState(n_qubits=state.n_qubits, amps=amps)

    def run_program(self, program: Program) -> QState:
        """Aplicação sequencial a partir de |0…0⟩ (determinística)."""
        return self.apply_program(self.new_state(program.n_qubits), program)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_GATE")
    def program_unitary(self, program: Program) -> np.ndarray:
        """Reconstrói a unitária do programa coluna a coluna (a coluna k é a imagem de |k⟩)."""
        self.new_state(program.n_qubits)
        columns = np.eye(1 << program.n_qubits, dtype=np.complex128)
        for gate in program.steps:
            columns = apply_matrix(columns, program.n_qubits, gate.matrix, gate.targets)
        return columns

    def born_probabilities(self, state: QState) -> np.ndarray:
        return np.abs(state.amps) ** 2

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def measure_qubit_distribution(self, state: QState, qubit: int) -> Distribution:
        """p(b) = Σ |a_i|² sobre os índices cujo bit do qubit vale b."""
        self._require_qubit(state.n_qubits, qubit)
        probabilities = self.born_probabilities(state)
        bits = (np.arange(1 << state.n_qubits) >> qubit) & 1
        p_one = float(probabilities[bits == 1].sum())
        p_zero = float(probabilities[bits == 0].sum())
        return Distribution(probabilities={"0": p_zero, "1": p_one})

    def born_distribution(self, state: QState) -> Distribution:
        """Distribuição do registro inteiro; chaves com o qubit mais alto à esquerda, zeros omitidos."""
        probabilities = self.born_probabilities(state)
        support = np.flatnonzero(probabilities > 0)
        return Distribution(
            probabilities={format(int(i), f"0{state.n_qubits}b"): float(probabilities[i]) for i in support}
        )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def collapse_register(
        self, state: QState, qubits: Sequence[int], rng: np.random.Generator
    ) -> tuple[str, QState]:
        """Mede os qubits dados e retorna (resultado, estado pós-medida renormalizado).

        O resultado lista os qubits medidos do mais alto para o mais baixo.
        """
        if not qubits:
            return "", state
        for qubit in qubits:
            self._require_qubit(state.n_qubits, qubit)
        ordered = sorted(set(qubits), reverse=True)
        keys = outcome_keys(state.n_qubits, ordered)
        marginal = np.bincount(keys, weights=self.born_probabilities(state), minlength=1 << len(ordered))
        outcome = int(rng.choice(marginal.size, p=marginal / marginal.sum()))
        amps = np.where(keys == outcome, state.amps, 0) / np.sqrt(marginal[outcome])
        logger.debug("Register collapsed", operation="collapse_register", qubits=ordered, outcome=outcome)
        return format(outcome, f"0{len(ordered)}b"), QState(n_qubits=state.n_qubits, amps=amps)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_SHOTS")
    def sample(self, state: QState, shots: int, rng: np.random.Generator) -> dict[str, int]:
        """Amostras i.i.d. do registro inteiro, como contagens por cadeia de bits ordenada."""
        if shots < 1:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Shots must be >= 1, got {shots}",
                error_code="INVALID_SHOTS",
            )
        probabilities = self.born_probabilities(state)
        draws = rng.choice(probabilities.size, size=shots, p=probabilities / probabilities.sum())
        outcomes, counts = np.unique(draws, return_counts=True)
        return {format(int(o), f"0{state.n_qubits}b"): int(c) for o, c in zip(outcomes, counts, strict=True)}
