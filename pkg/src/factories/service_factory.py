from functools import lru_cache

from src.repositories.interfaces.payload_repository import IPayloadRepository
from src.repositories.json_file import JsonFileRepository
from src.services.fft_service import FFTService
from src.services.fourier_service import FourierService
from src.services.group_service import GroupService
from src.services.period_finding_service import PeriodFindingService
from src.services.qft_compiler_service import QFTCompilerService
from src.services.simulator_service import SimulatorService


def make_payload_repository() -> IPayloadRepository:
    """Cria o repositório de documentos JSON no sistema de arquivos.

    Returns:
        IPayloadRepository: Repositório de entrada e saída.
    """
    return JsonFileRepository()


@lru_cache(maxsize=1)
def make_group_service() -> GroupService:
    return GroupService()


@lru_cache(maxsize=1)
def make_fourier_service() -> FourierService:
    return FourierService(make_group_service())


@lru_cache(maxsize=1)
def make_fft_service() -> FFTService:
    return FFTService(make_group_service(), make_fourier_service())


@lru_cache(maxsize=1)
def make_simulator_service() -> SimulatorService:
    return SimulatorService()


@lru_cache(maxsize=1)
def make_qft_compiler_service() -> QFTCompilerService:
    return QFTCompilerService(make_simulator_service())


@lru_cache(maxsize=1)
def make_period_finding_service() -> PeriodFindingService:
    """Cria o pipeline do subgrupo oculto (singleton) com todos os serviços de que depende.

    Returns:
        PeriodFindingService: Serviço de busca de período.
    """
    return PeriodFindingService(
        make_group_service(),
        make_fourier_service(),
        make_simulator_service(),
        make_qft_compiler_service(),
    )
