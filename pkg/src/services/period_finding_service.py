import math
from collections.abc import Callable

import numpy as np

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.models.circuit import QState
from src.models.group import AbelianGroup, Subgroup
from src.models.hsp import FunctionTable, FunctionTablePayload, SamplingMode, StabilizerResult
from src.services.fourier_service import FourierService
from src.services.group_service import GroupService, coset_minimum
from src.services.qft_compiler_service import QFTCompilerService
from src.services.simulator_service import SimulatorService
from src.utils.logger import get_logger

logger = get_logger(__name__)


def register_width(size: int) -> int:
    """Qubits necessários para indexar `size` valores (pelo menos 1)."""
    return max(1, (size - 1).bit_length())


class PeriodFindingService:
    """Busca de período / subgrupo oculto em grupos abelianos finitos.

    Pipeline: |f⟩ = Σ_g |g⟩|f(g)⟩/√|G| → medir o registro de valores (classe
    lateral g_0 + K) → transformada de Fourier → amostrar rótulos l com
    χ_l(k) = 1 para todo k ∈ K → intersectar os anuladores dos rótulos.
    """

    SERVICE_NAME = "PeriodFindingService"

    def __init__(
        self,
        group_service: GroupService,
        fourier_service: FourierService,
        simulator_service: SimulatorService,
        qft_compiler_service: QFTCompilerService,
    ) -> None:
        self._groups = group_service
        self._fourier = fourier_service
        self._simulator = simulator_service
        self._qft = qft_compiler_service

    def _values(self, function: FunctionTable) -> np.ndarray:
        return np.asarray(function.values, dtype=np.int64)

    def _label_probabilities(self, amplitudes: np.ndarray) -> np.ndarray:
        """Probabilidades de Born normalizadas; abaixo de `character_tolerance` viram zero.

        Rótulos fora do anulador só aparecem com peso de ruído numérico, então
        o arredondamento garante que nunca sejam sorteados.
        """
        probabilities = np.abs(amplitudes) ** 2
        probabilities[probabilities < get_settings().character_tolerance] = 0.0
        return probabilities / probabilities.sum()

    def _annihilator_mask(self, group: AbelianGroup, elements: np.ndarray) -> np.ndarray:
        """Máscara dos l ∈ G com χ_l(e) = 1 para todo e dado (congruências inteiras, sem fases em ponto flutuante)."""
        everything = np.arange(group.order, dtype=np.int64)
        mask = np.ones(group.order, dtype=bool)
        for element in np.unique(elements):
            mask &= group.phase_numerators(everything, int(element)) == 0
        return mask

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INPUT_ERROR")
    def function_from_payload(self, payload: FunctionTablePayload) -> FunctionTable:
        """Converte o JSON de entrada em FunctionTable (o grupo vem da especificação textual)."""
        group = self._groups.parse_group_spec(payload.group)
        return FunctionTable(group=group, values=tuple(payload.values))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def stabilizer_bruteforce(self, function: FunctionTable) -> Subgroup:
        """K = {k : f(k + g) = f(g) para todo g}, verificando cada candidato.

        Só precisam ser testados os k com f(k) = f(0).
        """
        group = function.group
        values = self._values(function)
        everything = np.arange(group.order, dtype=np.int64)
        members = [
            int(k)
            for k in np.flatnonzero(values == values[0])
            if np.array_equal(values[group.add_indices(everything, int(k))], values)
        ]
        return Subgroup(parent=group, members=tuple(members))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="DEGENERATE_FUNCTION")
    def check_nondegenerate(self, function: FunctionTable, stabilizer: Subgroup) -> bool:
        """Verdadeiro se f(g_1) = f(g_2) ⇔ g_1 − g_2 ∈ K, isto é, f é injetiva nas classes laterais de K."""
        coset = coset_minimum(function.group, stabilizer.generators())
        pairs = np.unique(np.stack([self._values(function), coset], axis=1), axis=0)
        return bool(pairs.shape[0] == np.unique(self._values(function)).size)

    def _require_nondegenerate(self, function: FunctionTable) -> Subgroup:
        stabilizer = self.stabilizer_bruteforce(function)
        if not self.check_nondegenerate(function, stabilizer):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message="Function is degenerate: some value is taken on more than one coset of its stabiliser",
                error_code="DEGENERATE_FUNCTION",
            )
        return stabilizer

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SIZE_CAP_EXCEEDED")
    def build_function_state(self, function: FunctionTable) -> QState:
        """|f⟩ = (1/√|G|) Σ_g |g⟩|f(g)⟩.

        O registro de valores ocupa os qubits baixos (valores recodificados
        como 0 … |X| − 1), o de grupo os altos: índice = g·2^{q_x} + código(f(g)).
        """
        group = function.group
        _, codes = np.unique(self._values(function), return_inverse=True)
        value_qubits = register_width(int(codes.max()) + 1)
        group_qubits = register_width(group.order)
        total = value_qubits + group_qubits
        if total > get_settings().max_qubits:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Joint register needs {total} qubits, cap is {get_settings().max_qubits}",
                error_code="SIZE_CAP_EXCEEDED",
            )
        amps = np.zeros(1 << total, dtype=np.complex128)
        amps[(np.arange(group.order) << value_qubits) + codes.reshape(-1)] = 1 / math.sqrt(group.order)
        return QState(n_qubits=total, amps=amps)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="DEGENERATE_FUNCTION")
    def sample_coset_state(self, function: FunctionTable, rng: np.random.Generator) -> tuple[int, QState]:
        """Mede o registro de valores de |f⟩ e devolve (valor observado, estado do registro de grupo).

        O estado restante é (1/√|K|) Σ_{k∈K} |g_0 + k⟩ para uma classe g_0 + K uniforme.
        """
        self._require_nondegenerate(function)
        distinct = np.unique(self._values(function))
        value_qubits = register_width(distinct.size)
        joint = self.build_function_state(function)
        outcome, collapsed = self._simulator.collapse_register(joint, list(range(value_qubits)), rng)
        code = int(outcome, 2)
        group_amps = collapsed.amps.reshape(-1, 1 << value_qubits)[:, code]
        state = QState(n_qubits=joint.n_qubits - value_qubits, amps=np.ascontiguousarray(group_amps))
        return int(distinct[code]), state

    def _is_power_of_two_cyclic(self, group: AbelianGroup, n_qubits: int) -> bool:
        return group.rank == 1 and group.order == 1 << n_qubits and group.order > 1

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def fourier_sample(
        self, coset_state: QState, group: AbelianGroup, shots: int, rng: np.random.Generator
    ) -> list[int]:
        """Aplica a transformada de G ao registro de grupo e amostra `shots` rótulos.

        Para G = Z_{2^m} a transformada é a rede da QFT executada no simulador;
        nos demais grupos, o oráculo denso.
        """
        amps = coset_state.amps
        if amps.size < group.order or np.any(amps[group.order :] != 0):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"State does not live on the {group.order} group elements",
                error_code="LENGTH_MISMATCH",
            )
        if self._is_power_of_two_cyclic(group, coset_state.n_qubits):
            spectrum = self._qft.apply_qft(coset_state).amps
        else:
            spectrum = self._fourier.apply_dense(group, amps[: group.order])
        draws = rng.choice(group.order, size=shots, p=self._label_probabilities(spectrum))
        return [int(label) for label in draws]

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SIZE_CAP_EXCEEDED")
    def exact_label_distribution(self, group: AbelianGroup, subgroup: Subgroup) -> np.ndarray:
        """Distribuição de Born exata de F|K⟩, |K⟩ = Σ_{k∈K} |k⟩/√|K|.

        Igual para todo estado de classe lateral g_0 + K: o deslocamento só muda fases.
        """
        cap = get_settings().dense_matrix_cap
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the exact distribution cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )
        state = np.zeros(group.order, dtype=np.complex128)
        state[subgroup.member_array()] = 1 / math.sqrt(subgroup.order)
        return self._label_probabilities(self._fourier.apply_dense(group, state))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def annihilator(self, group: AbelianGroup, subgroup: Subgroup) -> Subgroup:
        """{l : χ_l(k) = 1 para todo k ∈ K}."""
        mask = self._annihilator_mask(group, np.asarray(subgroup.generators(), dtype=np.int64))
        return Subgroup(parent=group, members=tuple(np.flatnonzero(mask).tolist()))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def reconstruct_subgroup(self, group: AbelianGroup, labels: list[int]) -> Subgroup:
        """K̂ = {k : χ_l(k) = 1 para todo rótulo l observado}.

        Cada rótulo dá a congruência Σ_i (l_i k_i mod m_i)·(L/m_i) ≡ 0 (mod L);
        em (Z_2)^n isto é o núcleo sobre GF(2). Sem rótulos o resultado é G.
        """
        if not labels:
            logger.warning("Empty label set, returning the whole group", operation="reconstruct_subgroup")
        for label in labels:
            self._groups.element_from_index(group, label)
        mask = self._annihilator_mask(group, np.asarray(labels, dtype=np.int64))
        return Subgroup(parent=group, members=tuple(np.flatnonzero(mask).tolist()))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def stabilizer_from_labels(
        self, group: AbelianGroup, labels: list[int], converged: bool = False
    ) -> StabilizerResult:
        """Empacota K̂ dos rótulos em um StabilizerResult; sem rótulos sai `vacuous=True` (K̂ = G)."""
        return StabilizerResult(
            subgroup=self.reconstruct_subgroup(group, labels),
            samples_used=len(labels),
            labels_seen=tuple(labels),
            converged=converged,
            vacuous=not labels,
        )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def function_from_subgroup(
        self, group: AbelianGroup, subgroup: Subgroup, rng: np.random.Generator
    ) -> FunctionTable:
        """f não degenerada com estabilizador K: índice da classe lateral, reetiquetado aleatoriamente."""
        coset = coset_minimum(group, subgroup.generators())
        _, coset_index = np.unique(coset, return_inverse=True)
        relabel = rng.permutation(subgroup.index)
        return FunctionTable(group=group, values=tuple(relabel[coset_index.reshape(-1)].tolist()))

    def _label_source(
        self, function: FunctionTable, mode: SamplingMode, rng: np.random.Generator
    ) -> Callable[[], int]:
        group = function.group
        if mode == SamplingMode.EXACT:
            values = self._values(function)
            level_set = np.flatnonzero(values == values[0])
            probabilities = self.exact_label_distribution(
                group, Subgroup(parent=group, members=tuple(level_set.tolist()))
            )
            return lambda: int(rng.choice(group.order, p=probabilities))
        cap = get_settings().joint_simulation_cap
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the joint simulation cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )

        def simulate_one() -> int:
            _, state = self.sample_coset_state(function, rng)
            return self.fourier_sample(state, group, 1, rng)[0]

        return simulate_one

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="DEGENERATE_FUNCTION")
    def find_period(
        self,
        function: FunctionTable,
        max_shots: int,
        rng: np.random.Generator,
        mode: SamplingMode = SamplingMode.EXACT,
    ) -> StabilizerResult:
        """Amostra rótulos até K̂ não encolher por `confirmation_window` amostras seguidas.

        Args:
            function: Tabela de f (não degenerada).
            max_shots: Máximo de amostras; ao esgotar, o resultado sai com converged=False.
            rng: Gerador com seed.
            mode: exact (atalho independente de g_0) ou simulate (estado conjunto).

        Returns:
            StabilizerResult: Subgrupo reconstruído, rótulos e flag de convergência.
        """
        if max_shots < 1:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"max_shots must be >= 1, got {max_shots}",
                error_code="INVALID_SHOTS",
            )
        self._require_nondegenerate(function)
        group = function.group
        window = get_settings().confirmation_window
        draw = self._label_source(function, mode, rng)
        everything = np.arange(group.order, dtype=np.int64)

        candidate = np.ones(group.order, dtype=bool)
        labels: list[int] = []
        stable = 0
        converged = False
        while len(labels) < max_shots:
            label = draw()
            labels.append(label)
            narrowed = candidate & (group.phase_numerators(everything, label) == 0)
            stable = stable + 1 if narrowed.sum() == candidate.sum() else 0
            candidate = narrowed
            if stable >= window:
                converged = True
                break

        result = self.stabilizer_from_labels(group, labels, converged)
        logger.info(
            "Period search finished",
            operation="find_period",
            order=group.order,
            mode=mode.value,
            samples=len(labels),
            subgroup_order=result.subgroup.order,
            converged=converged,
        )
        return result

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INPUT_ERROR")
    def simon(
        self,
        n: int,
        mask: str,
        max_shots: int,
        rng: np.random.Generator,
        mode: SamplingMode = SamplingMode.EXACT,
    ) -> StabilizerResult:
        """Problema de Simon: G = (Z_2)^n, K = {0, ξ}; a máscara ξ é dada como cadeia de n bits.

        A máscara nula dá f injetiva (K trivial).
        """
        if len(mask) != n or any(bit not in "01" for bit in mask):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Mask must be a bitstring of length {n}, got '{mask}'",
                error_code="INPUT_ERROR",
            )
        group = self._groups.make_group([2] * n)
        hidden = self._groups.subgroup_from_indices(group, sorted({0, int(mask, 2)}))
        function = self.function_from_subgroup(group, hidden, rng)
        return self.find_period(function, max_shots, rng, mode)

    @staticmethod
    def recovered_mask(result: StabilizerResult, n: int) -> str | None:
        """Elemento não nulo de K̂ quando |K̂| ≤ 2; None quando a amostragem não isolou ξ."""
        members = result.subgroup.members
        if len(members) == 1:
            return "0" * n
        if len(members) == 2:
            return format(members[1], f"0{n}b")
        return None
