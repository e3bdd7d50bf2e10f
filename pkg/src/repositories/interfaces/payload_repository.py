from abc import ABC, abstractmethod
from pathlib import Path

from src.models.circuit import ProgramPayload
from src.models.hsp import FunctionTablePayload
from src.models.vector import ComplexVector


class IPayloadRepository(ABC):
    """Contrato de entrada e saída dos documentos JSON da CLI."""

    @abstractmethod
    def read_vector(self, path: Path) -> ComplexVector:
        """Lê um vetor complexo (lista de pares [re, im]).

        Args:
            path: Origem do documento.

        Returns:
            ComplexVector: Vetor validado.
        """
        raise NotImplementedError

    @abstractmethod
    def read_program(self, path: Path) -> ProgramPayload:
        """Lê um programa de portas no formato {"n": ..., "steps": [...]}.

        Args:
            path: Origem do documento.

        Returns:
            ProgramPayload: Programa validado (ainda sem matrizes).
        """
        raise NotImplementedError

    @abstractmethod
    def read_function_table(self, path: Path) -> FunctionTablePayload:
        """Lê a tabela de uma função f: G → X.

        Args:
            path: Origem do documento.

        Returns:
            FunctionTablePayload: Especificação do grupo e valores.
        """
        raise NotImplementedError

    @abstractmethod
    def write_output(self, text: str, path: Path | None = None) -> None:
        """Grava a saída de um subcomando.

        Args:
            text: Documento já serializado.
            path: Destino; stdout quando None.
        """
        raise NotImplementedError
