import numpy as np

from src.factories.gate_factory import program_from_payload
from src.models.circuit import SimulateResponse
from src.models.run_config import RunConfig
from src.repositories.interfaces.payload_repository import IPayloadRepository
from src.services.simulator_service import SimulatorService

MEASURE_ALL = "all"


class SimulateController:
    def __init__(self, simulator_service: SimulatorService, payload_repository: IPayloadRepository) -> None:
        """Inicializa o controller do subcomando `simulate`.

        Args:
            simulator_service: Simulador de vetor de estado.
            payload_repository: Origem do programa JSON.
        """
        self.simulator_service = simulator_service
        self.payload_repository = payload_repository

    def run(self, config: RunConfig, measure: str = MEASURE_ALL, shots: int | None = None) -> SimulateResponse:
        """Executa o programa de `config.input_path` a partir de |0…0⟩.

        Args:
            config: Configuração da execução.
            measure: "all" ou o índice de um qubit.
            shots: Número de amostras; sem amostragem quando None.

        Returns:
            SimulateResponse: Distribuição de Born e, com shots, as contagens.
        """
        program = program_from_payload(self.payload_repository.read_program(config.input_path))
        state = self.simulator_service.run_program(program)
        rng = np.random.default_rng(config.seed)

        if measure == MEASURE_ALL:
            distribution = self.simulator_service.born_distribution(state)
            counts = self.simulator_service.sample(state, shots, rng) if shots is not None else None
        else:
            qubit = int(measure)
            distribution = self.simulator_service.measure_qubit_distribution(state, qubit)
            counts = None
            if shots is not None:
                position = state.n_qubits - 1 - qubit
                counts = {}
                for key, count in self.simulator_service.sample(state, shots, rng).items():
                    counts[key[position]] = counts.get(key[position], 0) + count
                counts = dict(sorted(counts.items()))

        return SimulateResponse(
            n_qubits=state.n_qubits,
            measure=measure,
            distribution=distribution.probabilities,
            shots=shots,
            counts=counts,
            seed=config.seed,
        )
