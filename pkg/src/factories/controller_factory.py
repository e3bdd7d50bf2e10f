from functools import lru_cache

from src.controllers import BenchController, FFTController, PeriodController, QFTController, SimulateController
from src.factories.service_factory import (
    make_fft_service,
    make_fourier_service,
    make_group_service,
    make_payload_repository,
    make_period_finding_service,
    make_qft_compiler_service,
    make_simulator_service,
)


@lru_cache(maxsize=1)
def make_fft_controller() -> FFTController:
    return FFTController(make_group_service(), make_fft_service(), make_payload_repository())


@lru_cache(maxsize=1)
def make_simulate_controller() -> SimulateController:
    return SimulateController(make_simulator_service(), make_payload_repository())


@lru_cache(maxsize=1)
def make_qft_controller() -> QFTController:
    return QFTController(make_qft_compiler_service())


@lru_cache(maxsize=1)
def make_period_controller() -> PeriodController:
    """Cria o controller de `period-find` e `simon` (singleton).

    Returns:
        PeriodController: Controller do pipeline do subgrupo oculto.
    """
    return PeriodController(make_group_service(), make_period_finding_service(), make_payload_repository())


@lru_cache(maxsize=1)
def make_bench_controller() -> BenchController:
    return BenchController(make_group_service(), make_fourier_service(), make_fft_service())
