from collections.abc import Sequence

import numpy as np

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.factories.gate_factory import make_gate
from src.models.circuit import Gate, GateCountReport, GateList, GateName, Program, QState, ReorderMode
from src.services.simulator_service import SimulatorService
from src.utils.logger import get_logger

logger = get_logger(__name__)


class QFTCompilerService:
    """Compila a transformada de Fourier em Z_{2^m} na rede de Hadamards e fases condicionais.

    O nível k (transformada de tamanho 2^k) atua nos qubits base = m − k até
    m − 1 e é executado depois do nível k − 1:

    1. C_p entre o qubit base (controle) e base + p, p = 1 … k − 1, com fase
       w^{2^{p−1}}, w = exp(2πi / 2^k) (w é local ao nível);
    2. H no qubit base;
    3. permutação cíclica i_{k−1}…i_1 i_0 → i_0 i_{k−1}…i_1, como trocas
       (base, base + 1), …, (m − 2, m − 1) ou como reetiquetagem dos fios.
    """

    SERVICE_NAME = "QFTCompilerService"

    def __init__(self, simulator_service: SimulatorService) -> None:
        self._simulator = simulator_service

    def _require_size(self, m: int) -> None:
        cap = get_settings().max_qubits
        if not 1 <= m <= cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"QFT size m must be between 1 and {cap}, got {m}",
                error_code="QUBIT_OUT_OF_RANGE",
            )

    def phase_ladder(self, k: int, base: int, wires: Sequence[int] | None = None) -> list[Gate]:
        """Portas C_p do nível k: fase 2^{p−1}/2^k voltas entre os fios base e base + p."""
        wires = list(wires) if wires is not None else list(range(base + k))
        return [
            make_gate(GateName.CPHASE, [wires[base], wires[base + p]], param=(1 << (p - 1)) / (1 << k))
            for p in range(1, k)
        ]

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def compile_qft(self, m: int, reorder_mode: ReorderMode | None = None) -> GateList:
        """Gera a rede da QFT em m qubits.

        Args:
            m: Número de qubits (transformada de tamanho 2^m).
            reorder_mode: swaps (portas SWAP explícitas) ou relabel (permutação final registrada).

        Returns:
            GateList: Portas e permutação final; a unitária composta é F_{2^m}.
        """
        self._require_size(m)
        mode = reorder_mode or ReorderMode(get_settings().default_reorder_mode)
        wires = list(range(m))
        gates: list[Gate] = []
        for k in range(1, m + 1):
            base = m - k
            gates.extend(self.phase_ladder(k, base, wires))
            gates.append(make_gate(GateName.H, [wires[base]]))
            if mode == ReorderMode.SWAPS:
                gates.extend(make_gate(GateName.SWAP, [q, q + 1]) for q in range(base, m - 1))
            else:
                wires = wires[:base] + wires[base + 1 :] + [wires[base]]
        final_permutation = tuple(wires) if mode == ReorderMode.RELABEL else tuple(range(m))
        logger.info("QFT compiled", operation="compile_qft", m=m, reorder=mode.value, gates=len(gates))
        return GateList(n_qubits=m, gates=tuple(gates), reorder_mode=mode, final_permutation=final_permutation)

    def gate_count(self, m: int, reorder_mode: ReorderMode = ReorderMode.SWAPS) -> GateCountReport:
        """Contagem em forma fechada: m Hadamards, m(m−1)/2 fases e m(m−1)/2 trocas no modo swaps."""
        pairs = m * (m - 1) // 2
        swaps = pairs if reorder_mode == ReorderMode.SWAPS else 0
        return GateCountReport(hadamards=m, cphases=pairs, swaps=swaps, total=m + pairs + swaps)

    def count_gates(self, gate_list: GateList) -> GateCountReport:
        """Contagem literal de uma lista compilada."""
        names = [gate.name for gate in gate_list.gates]
        hadamards = names.count(GateName.H)
        cphases = names.count(GateName.CPHASE)
        swaps = names.count(GateName.SWAP)
        return GateCountReport(hadamards=hadamards, cphases=cphases, swaps=swaps, total=hadamards + cphases + swaps)

    def to_program(self, gate_list: GateList) -> Program:
        return Program(n_qubits=gate_list.n_qubits, steps=gate_list.gates)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def apply_final_permutation(self, state: QState, permutation: Sequence[int]) -> QState:
        """Move o qubit lógico q do fio físico permutation[q] para a posição q."""
        n = state.n_qubits
        if sorted(permutation) != list(range(n)):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"{list(permutation)} is not a permutation of {n} qubit(s)",
                error_code="QUBIT_OUT_OF_RANGE",
            )
        order = [0] * n
        for logical, physical in enumerate(permutation):
            order[n - 1 - logical] = n - 1 - physical
        amps = state.amps.reshape((2,) * n).transpose(order).reshape(-1)
        return QState(n_qubits=n, amps=np.ascontiguousarray(amps))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="QUBIT_OUT_OF_RANGE")
    def apply_qft(self, state: QState, reorder_mode: ReorderMode | None = None) -> QState:
        """Compila, executa e desfaz a reetiquetagem: resultado = F_{2^m}·amps."""
        gate_list = self.compile_qft(state.n_qubits, reorder_mode)
        result = self._simulator.apply_program(state, self.to_program(gate_list))
        if gate_list.reorder_mode == ReorderMode.RELABEL:
            result = self.apply_final_permutation(result, gate_list.final_permutation)
        return result

    def render_text(self, gate_list: GateList) -> str:
        """Uma porta por linha ("H 0", "CPHASE 0 2 0.25", "SWAP 1 2") e a permutação final."""
        lines = []
        for gate in gate_list.gates:
            targets = " ".join(str(t) for t in gate.targets)
            suffix = f" {gate.param:g}" if gate.param is not None else ""
            lines.append(f"{gate.name.value} {targets}{suffix}")
        lines.append("PERMUTATION " + " ".join(str(w) for w in gate_list.final_permutation))
        return "\n".join(lines) + "\n"
