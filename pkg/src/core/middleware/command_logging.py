"""Logging estruturado de cada invocação de subcomando da CLI."""

import time
import uuid
from collections.abc import Iterator
from contextlib import contextmanager

from src.models.run_config import RunConfig
from src.utils.logger import get_logger, set_run_id

logger = get_logger(__name__)


@contextmanager
def command_logging(config: RunConfig, run_id: str | None = None) -> Iterator[str]:
    """Envolve a execução de um subcomando com run ID e tempo de execução.

    Captura:
    - Subcomando e seed
    - Caminhos de entrada e saída
    - Duração em ms
    - Run ID para correlacionar todos os logs da invocação

    Args:
        config: Configuração da execução.
        run_id: ID explícito (gera um UUID quando omitido).

    Yields:
        str: O run ID em uso.
    """
    run_id = run_id or str(uuid.uuid4())
    set_run_id(run_id)

    start_time = time.perf_counter()
    logger.info(
        "command_started",
        subcommand=config.subcommand.value,
        seed=config.seed,
        input_path=str(config.input_path) if config.input_path else None,
        output_path=str(config.output_path) if config.output_path else None,
    )

    try:
        yield run_id
    except Exception as exc:
        process_time = time.perf_counter() - start_time
        logger.warning(
            "command_failed",
            subcommand=config.subcommand.value,
            error=str(exc),
            duration_ms=round(process_time * 1000, 2),
        )
        raise
    else:
        process_time = time.perf_counter() - start_time
        logger.info(
            "command_finished",
            subcommand=config.subcommand.value,
            duration_ms=round(process_time * 1000, 2),
        )
