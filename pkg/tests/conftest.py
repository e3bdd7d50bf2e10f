"""Pytest configuration and shared fixtures."""

from collections.abc import Iterator

import numpy as np
import pytest

from src.core.settings import get_settings
from src.models.group import AbelianGroup
from src.repositories.in_memory import InMemoryPayloadRepository
from src.services.fft_service import FFTService
from src.services.fourier_service import FourierService
from src.services.group_service import GroupService
from src.services.period_finding_service import PeriodFindingService
from src.services.qft_compiler_service import QFTCompilerService
from src.services.simulator_service import SimulatorService


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    """Settings are re-read for every test so monkeypatched env vars take effect."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator (fixed seed, reproducible draws)."""
    return np.random.default_rng(20240601)


@pytest.fixture
def group_service() -> GroupService:
    return GroupService()


@pytest.fixture
def fourier_service(group_service: GroupService) -> FourierService:
    return FourierService(group_service)


@pytest.fixture
def fft_service(group_service: GroupService, fourier_service: FourierService) -> FFTService:
    return FFTService(group_service, fourier_service)


@pytest.fixture
def simulator_service() -> SimulatorService:
    return SimulatorService()


@pytest.fixture
def qft_compiler_service(simulator_service: SimulatorService) -> QFTCompilerService:
    return QFTCompilerService(simulator_service)


@pytest.fixture
def period_finding_service(
    group_service: GroupService,
    fourier_service: FourierService,
    simulator_service: SimulatorService,
    qft_compiler_service: QFTCompilerService,
) -> PeriodFindingService:
    return PeriodFindingService(group_service, fourier_service, simulator_service, qft_compiler_service)


@pytest.fixture
def payload_repository() -> InMemoryPayloadRepository:
    """Fresh in-memory repository (no shared state)."""
    return InMemoryPayloadRepository()


@pytest.fixture
def z6() -> AbelianGroup:
    return AbelianGroup(moduli=(6,))


@pytest.fixture
def z2_z3() -> AbelianGroup:
    return AbelianGroup(moduli=(2, 3))
