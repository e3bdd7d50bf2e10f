import time

import numpy as np

from src.core.settings import get_settings
from src.models.fft import BenchEntry, BenchResponse, FFTMethod
from src.models.run_config import RunConfig
from src.services.fft_service import FFTService
from src.services.fourier_service import FourierService
from src.services.group_service import GroupService
from src.utils.logger import get_logger

logger = get_logger(__name__)


class BenchController:
    def __init__(
        self, group_service: GroupService, fourier_service: FourierService, fft_service: FFTService
    ) -> None:
        """Inicializa o controller do subcomando `bench`.

        Args:
            group_service: Serviço de grupos (leitura da especificação).
            fourier_service: Oráculo denso para medir o erro de cada método.
            fft_service: Serviço das transformadas comparadas.
        """
        self.group_service = group_service
        self.fourier_service = fourier_service
        self.fft_service = fft_service

    def run(
        self, config: RunConfig, group_spec: str, methods: list[FFTMethod], timing: bool = False
    ) -> BenchResponse:
        """Compara as contagens de operações dos métodos sobre um vetor aleatório com seed.

        O erro em relação ao oráculo denso só é medido quando |G| cabe no limite
        da matriz densa; o tempo de parede só é incluído com `timing`.

        Args:
            config: Configuração da execução.
            group_spec: Especificação do grupo.
            methods: Métodos a comparar, na ordem pedida.
            timing: Inclui wall_clock_ms em cada entrada.

        Returns:
            BenchResponse: Uma entrada por método.
        """
        group = self.group_service.parse_group_spec(group_spec)
        self.fft_service.check_transform_size(group)
        rng = np.random.default_rng(config.seed)
        values = rng.standard_normal(group.order) + 1j * rng.standard_normal(group.order)
        oracle = None
        if group.order <= get_settings().dense_matrix_cap:
            oracle = self.fourier_service.apply_dense(group, values)

        entries = []
        for method in methods:
            start = time.perf_counter()
            spectrum, counts = self.fft_service.transform(group, values, method)
            elapsed_ms = (time.perf_counter() - start) * 1000
            error = float(np.max(np.abs(spectrum - oracle))) if oracle is not None else None
            entries.append(
                BenchEntry(
                    method=method,
                    complex_multiplies=counts.complex_multiplies,
                    complex_adds=counts.complex_adds,
                    predicted_bound=counts.predicted_bound,
                    max_abs_error=error,
                    within_tolerance=error <= config.tolerance if error is not None else None,
                    wall_clock_ms=round(elapsed_ms, 3) if timing else None,
                )
            )
            logger.info("Bench method measured", operation="bench", method=method.value, order=group.order)
        return BenchResponse(
            group=self.group_service.format_group_spec(group),
            order=group.order,
            seed=config.seed,
            entries=entries,
        )
