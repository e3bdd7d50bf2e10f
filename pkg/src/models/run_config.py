from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field

from src.core.settings import get_settings


class Subcommand(str, Enum):
    """Subcomandos disponíveis na CLI."""

    FFT = "fft"
    SIMULATE = "simulate"
    QFT_COMPILE = "qft-compile"
    PERIOD_FIND = "period-find"
    SIMON = "simon"
    BENCH = "bench"


def _default_seed() -> int:
    return get_settings().default_seed


def _default_tolerance() -> float:
    return get_settings().oracle_tolerance


class RunConfig(BaseModel):
    """Configuração de uma invocação da CLI.

    A seed tem um valor padrão fixo e documentado: a mesma invocação sem
    `--seed` sempre produz a mesma saída.
    """

    subcommand: Subcommand = Field(..., description="Subcomando em execução")
    seed: int = Field(default_factory=_default_seed, ge=0, lt=2**64, description="Seed de 64 bits do gerador")
    tolerance: float = Field(
        default_factory=_default_tolerance, gt=0, description="Tolerância numérica das verificações"
    )
    input_path: Path | None = Field(None, description="Arquivo JSON de entrada")
    output_path: Path | None = Field(None, description="Arquivo de saída (stdout quando omitido)")
    pretty: bool = Field(False, description="Saída JSON indentada")
