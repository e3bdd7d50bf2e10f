import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.models.group import AbelianGroup


class ComplexVector(BaseModel):
    """Vetor de amplitudes complexas no formato de troca JSON: lista de pares [re, im].

    Usado tanto para vetores clássicos f: G → C quanto para estados quânticos.
    Internamente os serviços trabalham com `numpy.ndarray` complex128;
    `to_array` e `from_array` fazem a conversão na fronteira.
    """

    amps: list[tuple[float, float]] = Field(..., min_length=1, description="Amplitudes como pares [re, im]")

    @field_validator("amps")
    @classmethod
    def validate_finite(cls, v: list[tuple[float, float]]) -> list[tuple[float, float]]:
        """Rejeita entradas NaN ou infinitas.

        Args:
            v: Pares [re, im].

        Returns:
            list[tuple[float, float]]: Pares validados.

        Raises:
            ValueError: Se alguma componente não for finita.
        """
        for position, (re, im) in enumerate(v):
            if not (np.isfinite(re) and np.isfinite(im)):
                raise ValueError(f"Amplitude at position {position} is not finite")
        return v

    def __len__(self) -> int:
        return len(self.amps)

    def to_array(self) -> np.ndarray:
        pairs = np.asarray(self.amps, dtype=np.float64).reshape(-1, 2)
        return pairs[:, 0] + 1j * pairs[:, 1]

    @classmethod
    def from_array(cls, values: np.ndarray) -> "ComplexVector":
        arr = np.asarray(values, dtype=np.complex128).reshape(-1)
        return cls(amps=[(float(z.real), float(z.imag)) for z in arr])


class FourierMatrix(BaseModel):
    """Matriz densa F_{gk} = χ_g(k) / √|G| de um grupo."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    group: AbelianGroup
    entries: np.ndarray

    @model_validator(mode="after")
    def validate_shape(self) -> "FourierMatrix":
        order = self.group.order
        if self.entries.shape != (order, order):
            raise ValueError(f"Fourier matrix must be {order}x{order}, got {self.entries.shape}")
        return self

    def is_unitary(self, tolerance: float) -> bool:
        """Verifica F·F† = I entrada a entrada."""
        product = self.entries @ self.entries.conj().T
        return bool(np.max(np.abs(product - np.eye(self.group.order))) <= tolerance)
