import json
import sys
from pathlib import Path
from typing import Any

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.models.circuit import ProgramPayload
from src.models.hsp import FunctionTablePayload
from src.models.vector import ComplexVector
from src.repositories.interfaces.payload_repository import IPayloadRepository
from src.utils.logger import get_logger

logger = get_logger(__name__)

REPOSITORY_NAME = "PayloadRepository"


class JsonFileRepository(IPayloadRepository):
    """Documentos JSON no sistema de arquivos (UTF-8); a saída vai para stdout quando não há destino."""

    def _load(self, path: Path) -> Any:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as err:
            raise ApplicationServiceError(
                service_name=REPOSITORY_NAME,
                message=f"Cannot read '{path}': {err.strerror or err}",
                error_code="INPUT_ERROR",
            ) from err
        try:
            return json.loads(text)
        except json.JSONDecodeError as err:
            raise ApplicationServiceError(
                service_name=REPOSITORY_NAME,
                message=f"'{path}' is not valid JSON (line {err.lineno}, column {err.colno})",
                error_code="INPUT_ERROR",
            ) from err

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_vector(self, path: Path) -> ComplexVector:
        return ComplexVector(amps=self._load(path))

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_program(self, path: Path) -> ProgramPayload:
        return ProgramPayload.model_validate(self._load(path))

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_function_table(self, path: Path) -> FunctionTablePayload:
        return FunctionTablePayload.model_validate(self._load(path))

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def write_output(self, text: str, path: Path | None = None) -> None:
        if path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        Path(path).write_text(text, encoding="utf-8")
        logger.debug("Output written", operation="write_output", path=str(path), size=len(text))
