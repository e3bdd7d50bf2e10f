from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.group import AbelianGroup, Subgroup


class FFTMethod(str, Enum):
    DENSE = "dense"
    TOWER = "tower"
    RADIX2 = "radix2"
    WALSH = "walsh"


class SubgroupTower(BaseModel):
    """Torre G ⊃ H_1 ⊃ … ⊃ H_n = {0} usada pela recursão de Cooley–Tukey.

    `levels` lista H_1, …, H_n (G fica implícito); o último nível é sempre o
    subgrupo trivial. O grupo de ordem 1 tem torre vazia.
    """

    model_config = ConfigDict(frozen=True)

    group: AbelianGroup
    levels: tuple[Subgroup, ...]

    @model_validator(mode="after")
    def validate_chain(self) -> "SubgroupTower":
        """Valida pai comum, inclusão estrita (índice ≥ 2) e término em {0}.

        Raises:
            ValueError: Se a cadeia não for uma torre válida.
        """
        if self.group.order == 1:
            if self.levels:
                raise ValueError("The trivial group has an empty tower")
            return self
        if not self.levels:
            raise ValueError("Tower must have at least one level")
        previous_order = self.group.order
        previous: Subgroup | None = None
        for depth, level in enumerate(self.levels, start=1):
            if level.parent != self.group:
                raise ValueError(f"Level {depth} is not a subgroup of the tower's group")
            if previous is not None and not level.is_subgroup_of(previous):
                raise ValueError(f"Level {depth} is not contained in level {depth - 1}")
            if previous_order // level.order < 2 or previous_order % level.order != 0:
                raise ValueError(f"Level {depth} must have index >= 2 in its predecessor")
            previous_order = level.order
            previous = level
        if self.levels[-1].order != 1:
            raise ValueError("Tower must end at the trivial subgroup {0}")
        return self

    @property
    def indices(self) -> list[int]:
        """Índices I_j = |H_{j−1}| / |H_j|, com H_0 = G."""
        orders = [self.group.order] + [level.order for level in self.levels]
        return [orders[j] // orders[j + 1] for j in range(len(self.levels))]


class OpCountReport(BaseModel):
    """Contagem exata de operações complexas de uma transformada."""

    complex_multiplies: int = Field(..., ge=0, description="Multiplicações complexas executadas")
    complex_adds: int = Field(..., ge=0, description="Somas complexas executadas")
    predicted_bound: int = Field(..., ge=0, description="Forma O(·) avaliada com constante 1")


class FFTResponse(BaseModel):
    """Saída do subcomando `fft`."""

    group: str = Field(..., description="Especificação canônica do grupo")
    method: FFTMethod
    spectrum: list[tuple[float, float]] = Field(..., description="Espectro como pares [re, im]")
    counts: OpCountReport | None = Field(None, description="Presente com --emit-counts")


class BenchEntry(BaseModel):
    method: FFTMethod
    complex_multiplies: int
    complex_adds: int
    predicted_bound: int
    max_abs_error: float | None = Field(None, description="Maior desvio absoluto em relação ao oráculo denso")
    within_tolerance: bool | None = Field(None, description="max_abs_error <= --tolerance")
    wall_clock_ms: float | None = Field(None, description="Tempo de parede (apenas com --timing)")


class BenchResponse(BaseModel):
    """Saída do subcomando `bench`: contagens por método sobre o mesmo vetor aleatório."""

    group: str
    order: int
    seed: int
    entries: list[BenchEntry]
