"""JSON Schemas publicados em schemas/, gerados a partir dos modelos pydantic."""

from typing import Any

from pydantic import BaseModel, TypeAdapter

from src.models.circuit import ProgramPayload, QFTCompileResponse, SimulateResponse
from src.models.fft import BenchResponse, FFTResponse
from src.models.hsp import FunctionTablePayload, PeriodFindResponse, SimonResponse
from src.models.run_config import Subcommand

OUTPUT_MODELS: dict[Subcommand, type[BaseModel]] = {
    Subcommand.FFT: FFTResponse,
    Subcommand.SIMULATE: SimulateResponse,
    Subcommand.QFT_COMPILE: QFTCompileResponse,
    Subcommand.PERIOD_FIND: PeriodFindResponse,
    Subcommand.SIMON: SimonResponse,
    Subcommand.BENCH: BenchResponse,
}

INPUT_MODELS: dict[str, type[BaseModel]] = {
    "program": ProgramPayload,
    "function-table": FunctionTablePayload,
}


def schema_file_name(name: str, kind: str) -> str:
    """Nome do arquivo em schemas/, ex. `fft.output.schema.json`."""
    return f"{name}.{kind}.schema.json"


def build_schemas() -> dict[str, dict[str, Any]]:
    """Todos os schemas publicados, indexados pelo nome do arquivo.

    O vetor complexo de entrada não tem modelo próprio: é uma lista pura de pares [re, im].
    """
    schemas = {
        schema_file_name(command.value, "output"): model.model_json_schema()
        for command, model in OUTPUT_MODELS.items()
    }
    schemas.update(
        {schema_file_name(name, "input"): model.model_json_schema() for name, model in INPUT_MODELS.items()}
    )
    vector = TypeAdapter(list[tuple[float, float]]).json_schema()
    vector["title"] = "ComplexVector"
    schemas[schema_file_name("complex-vector", "input")] = vector
    return schemas
