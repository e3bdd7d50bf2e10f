from pathlib import Path
from typing import Any

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.models.circuit import ProgramPayload
from src.models.hsp import FunctionTablePayload
from src.models.vector import ComplexVector
from src.repositories.interfaces.payload_repository import IPayloadRepository

REPOSITORY_NAME = "PayloadRepository"


class InMemoryPayloadRepository(IPayloadRepository):
    """Documentos já decodificados indexados por caminho; as saídas ficam em `outputs`."""

    def __init__(self, documents: dict[str, Any] | None = None) -> None:
        self._documents: dict[str, Any] = dict(documents or {})
        self.outputs: list[tuple[str | None, str]] = []

    def add(self, path: Path | str, document: Any) -> None:
        self._documents[str(path)] = document

    def _load(self, path: Path) -> Any:
        if str(path) not in self._documents:
            raise ApplicationServiceError(
                service_name=REPOSITORY_NAME,
                message=f"Cannot read '{path}': no such document",
                error_code="INPUT_ERROR",
            )
        return self._documents[str(path)]

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_vector(self, path: Path) -> ComplexVector:
        return ComplexVector(amps=self._load(path))

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_program(self, path: Path) -> ProgramPayload:
        return ProgramPayload.model_validate(self._load(path))

    @handle_service_errors_sync(service_name=REPOSITORY_NAME, error_code="INPUT_ERROR")
    def read_function_table(self, path: Path) -> FunctionTablePayload:
        return FunctionTablePayload.model_validate(self._load(path))

    def write_output(self, text: str, path: Path | None = None) -> None:
        self.outputs.append((str(path) if path is not None else None, text))
