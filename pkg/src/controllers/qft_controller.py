from src.factories.gate_factory import step_from_gate
from src.models.circuit import QFTCompileResponse, ReorderMode
from src.services.qft_compiler_service import QFTCompilerService


class QFTController:
    def __init__(self, qft_compiler_service: QFTCompilerService) -> None:
        self.qft_compiler_service = qft_compiler_service

    def compile(self, m: int, reorder: ReorderMode | None = None) -> QFTCompileResponse:
        """Compila a QFT em m qubits no formato de programa do `simulate`.

        Args:
            m: Número de qubits.
            reorder: swaps ou relabel (padrão das configurações quando None).

        Returns:
            QFTCompileResponse: Programa, permutação final e contagem de portas.
        """
        gate_list = self.qft_compiler_service.compile_qft(m, reorder)
        return QFTCompileResponse(
            n=gate_list.n_qubits,
            steps=[step_from_gate(gate) for gate in gate_list.gates],
            reorder=gate_list.reorder_mode,
            final_permutation=list(gate_list.final_permutation),
            gate_counts=self.qft_compiler_service.count_gates(gate_list),
        )

    def render_text(self, m: int, reorder: ReorderMode | None = None) -> str:
        """Mesma compilação, uma porta por linha."""
        return self.qft_compiler_service.render_text(self.qft_compiler_service.compile_qft(m, reorder))
