from collections import Counter

import numpy as np

from src.models.hsp import PeriodFindResponse, SamplingMode, SimonResponse, StabilizerResult
from src.models.run_config import RunConfig
from src.repositories.interfaces.payload_repository import IPayloadRepository
from src.services.group_service import GroupService
from src.services.period_finding_service import PeriodFindingService


def labels_histogram(result: StabilizerResult) -> dict[str, int]:
    counts = Counter(result.labels_seen)
    return {str(label): counts[label] for label in sorted(counts)}


class PeriodController:
    def __init__(
        self,
        group_service: GroupService,
        period_finding_service: PeriodFindingService,
        payload_repository: IPayloadRepository,
    ) -> None:
        """Inicializa o controller dos subcomandos `period-find` e `simon`.

        Args:
            group_service: Serviço de grupos.
            period_finding_service: Pipeline do subgrupo oculto.
            payload_repository: Origem da tabela da função.
        """
        self.group_service = group_service
        self.period_finding_service = period_finding_service
        self.payload_repository = payload_repository

    def period_find(self, config: RunConfig, shots: int, mode: SamplingMode) -> PeriodFindResponse:
        """Recupera o estabilizador da função de `config.input_path`.

        Args:
            config: Configuração da execução.
            shots: Máximo de amostras.
            mode: exact ou simulate.

        Returns:
            PeriodFindResponse: Subgrupo recuperado, histograma dos rótulos e convergência.
        """
        payload = self.payload_repository.read_function_table(config.input_path)
        function = self.period_finding_service.function_from_payload(payload)
        rng = np.random.default_rng(config.seed)
        result = self.period_finding_service.find_period(function, shots, rng, mode)
        subgroup = result.subgroup
        return PeriodFindResponse(
            group=self.group_service.format_group_spec(function.group),
            mode=mode,
            subgroup_order=subgroup.order,
            generators=[list(g.coords) for g in self.group_service.subgroup_generators(subgroup)],
            members=list(subgroup.members),
            labels_histogram=labels_histogram(result),
            samples_used=result.samples_used,
            converged=result.converged,
            seed=config.seed,
        )

    def simon(self, config: RunConfig, n: int, mask: str, shots: int, mode: SamplingMode) -> SimonResponse:
        """Gera f dois-para-um com máscara `mask` e recupera {0, mask}."""
        rng = np.random.default_rng(config.seed)
        result = self.period_finding_service.simon(n, mask, shots, rng, mode)
        return SimonResponse(
            n=n,
            mask=mask,
            recovered_mask=self.period_finding_service.recovered_mask(result, n),
            subgroup=[format(member, f"0{n}b") for member in result.subgroup.members],
            labels_histogram=labels_histogram(result),
            samples_used=result.samples_used,
            converged=result.converged,
            seed=config.seed,
        )
