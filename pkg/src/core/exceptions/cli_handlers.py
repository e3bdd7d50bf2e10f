import json
import sys
from typing import TextIO

from src.core.exceptions.application_errors import ApplicationServiceError
from src.utils.logger import get_run_id


def application_error_handler(
    exc: ApplicationServiceError,
    subcommand: str | None = None,
    stream: TextIO | None = None,
) -> int:
    """Emite ApplicationServiceError como JSON padronizado no stderr.

    Args:
        exc: Exceção ApplicationServiceError capturada.
        subcommand: Subcomando da CLI em execução (se conhecido).
        stream: Destino da mensagem (padrão: sys.stderr).

    Returns:
        int: Código de saída do processo associado ao erro.
    """
    error_dict: dict[str, str | int | None] = dict(exc.to_dict())
    error_dict.update(
        {
            "subcommand": subcommand,
            "run_id": get_run_id(),
        }
    )
    target = stream if stream is not None else sys.stderr
    target.write(json.dumps(error_dict, sort_keys=True) + "\n")
    return exc.exit_code
