from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.group import AbelianGroup, Subgroup


class SamplingMode(str, Enum):
    """exact: amostra da distribuição de Born de F|K⟩ (independente de g_0).
    simulate: simula o estado conjunto, colapsa o registro de valores e transforma.
    """

    EXACT = "exact"
    SIMULATE = "simulate"


class FunctionTable(BaseModel):
    """Função f: G → X dada por tabela (X codificado como inteiros), na ordem dos índices de G."""

    model_config = ConfigDict(frozen=True)

    group: AbelianGroup
    values: tuple[int, ...]

    @model_validator(mode="after")
    def validate_length(self) -> "FunctionTable":
        if len(self.values) != self.group.order:
            raise ValueError(f"Function table has {len(self.values)} values, group order is {self.group.order}")
        return self


class FunctionTablePayload(BaseModel):
    """Formato JSON: {"group": "<spec>", "values": [ints]}."""

    group: str = Field(..., min_length=1, description="Especificação do grupo, ex. Z15 ou Z2^3")
    values: list[int] = Field(..., min_length=1)


class StabilizerResult(BaseModel):
    """Subgrupo reconstruído a partir dos rótulos observados."""

    model_config = ConfigDict(frozen=True)

    subgroup: Subgroup
    samples_used: int = Field(..., ge=0)
    labels_seen: tuple[int, ...]
    converged: bool
    vacuous: bool = Field(False, description="Nenhum rótulo observado: o resultado é G inteiro")


class PeriodFindResponse(BaseModel):
    """Saída do subcomando `period-find`."""

    group: str
    mode: SamplingMode
    subgroup_order: int
    generators: list[list[int]] = Field(..., description="Geradores do subgrupo recuperado, como coordenadas")
    members: list[int] = Field(..., description="Índices dos elementos do subgrupo recuperado")
    labels_histogram: dict[str, int] = Field(..., description="Índice do rótulo → número de ocorrências")
    samples_used: int
    converged: bool
    seed: int


class SimonResponse(BaseModel):
    """Saída do subcomando `simon`."""

    n: int
    mask: str
    recovered_mask: str | None = Field(None, description="Elemento não nulo do subgrupo recuperado (None se |K̂| > 2)")
    subgroup: list[str]
    labels_histogram: dict[str, int]
    samples_used: int
    converged: bool
    seed: int
