import math
from functools import lru_cache

import numpy as np

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.models.group import AbelianGroup, GroupElement
from src.models.vector import FourierMatrix
from src.services.group_service import GroupService
from src.utils.logger import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=32)
def roots_of_unity(exponent: int) -> np.ndarray:
    """exp(2πi j / L) para j = 0, …, L − 1 (somente leitura)."""
    roots = np.exp(2j * np.pi * np.arange(exponent) / exponent)
    roots.setflags(write=False)
    return roots


def phase_block(group: AbelianGroup, labels: np.ndarray, args: np.ndarray) -> np.ndarray:
    """Numeradores inteiros φ[l, a] para um bloco de rótulos contra um bloco de argumentos."""
    table = group.coordinate_table()
    moduli = np.asarray(group.moduli, dtype=np.int64)
    weights = group.exponent // moduli
    products = (table[labels][:, None, :] * table[args][None, :, :]) % moduli
    return (products * weights).sum(axis=-1) % group.exponent


@lru_cache(maxsize=4)
def _dense_entries(moduli: tuple[int, ...]) -> np.ndarray:
    group = AbelianGroup(moduli=moduli)
    everything = np.arange(group.order, dtype=np.int64)
    entries = roots_of_unity(group.exponent)[phase_block(group, everything, everything)] / math.sqrt(group.order)
    entries.setflags(write=False)
    return entries


class FourierService:
    """Transformada de Fourier densa (oráculo) em grupos abelianos finitos.

    Convenção: F_{gk} = χ_g(k)/√|G| e |χ_k⟩ carrega o caractere CONJUGADO,
    de modo que F|χ_g⟩ = |g⟩ vale exatamente.
    """

    SERVICE_NAME = "FourierService"
    # Matrizes até esta ordem ficam em cache; acima disso apply_dense processa por blocos de linhas.
    CACHED_MATRIX_ORDER = 1024

    def __init__(self, group_service: GroupService) -> None:
        self._groups = group_service

    def _require_length(self, group: AbelianGroup, values: np.ndarray) -> np.ndarray:
        arr = np.asarray(values, dtype=np.complex128)
        if arr.ndim == 0 or arr.shape[0] != group.order:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Vector length {arr.shape[0] if arr.ndim else 0} does not match group order {group.order}",
                error_code="LENGTH_MISMATCH",
            )
        if not np.all(np.isfinite(arr)):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message="Vector contains NaN or infinite entries",
                error_code="LENGTH_MISMATCH",
            )
        return arr

    def _require_tabulable(self, group: AbelianGroup) -> None:
        cap = get_settings().subgroup_order_cap
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the tabulation cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def character_vector(self, group: AbelianGroup, label: GroupElement) -> np.ndarray:
        """χ_label(g) para todo g ∈ G, na ordem dos índices."""
        self._require_tabulable(group)
        index = self._groups.index_of_element(group, label)
        everything = np.arange(group.order, dtype=np.int64)
        phases = phase_block(group, np.array([index]), everything)[0]
        return roots_of_unity(group.exponent)[phases]

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SIZE_CAP_EXCEEDED")
    def dense_fourier_matrix(self, group: AbelianGroup) -> FourierMatrix:
        """Materializa F_{gk} = χ_g(k)/√|G|.

        Raises:
            ApplicationServiceError: Se |G| exceder dense_matrix_cap.
        """
        cap = get_settings().dense_matrix_cap
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the dense matrix cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )
        logger.debug("Building dense Fourier matrix", operation="dense_fourier_matrix", order=group.order)
        return FourierMatrix(group=group, entries=_dense_entries(group.moduli))

    def _streamed_product(self, group: AbelianGroup, values: np.ndarray, conjugate: bool) -> np.ndarray:
        if group.order <= self.CACHED_MATRIX_ORDER:
            entries = _dense_entries(group.moduli)
            return (entries.conj() if conjugate else entries) @ values
        block = get_settings().dense_stream_block
        roots = roots_of_unity(group.exponent)
        everything = np.arange(group.order, dtype=np.int64)
        scale = 1.0 / math.sqrt(group.order)
        result = np.empty_like(values)
        for start in range(0, group.order, block):
            rows = everything[start : start + block]
            entries = roots[phase_block(group, rows, everything)] * scale
            result[start : start + block] = (entries.conj() if conjugate else entries) @ values
        return result

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def apply_dense(self, group: AbelianGroup, values: np.ndarray) -> np.ndarray:
        """f̃(k) = (1/√|G|) Σ_g χ_k(g) f(g).

        Aceita um vetor (|G|,) ou um lote de colunas (|G|, B).

        Args:
            group: Grupo G.
            values: Vetor(es) de comprimento |G|.

        Returns:
            np.ndarray: Espectro com o mesmo formato da entrada.

        Raises:
            ApplicationServiceError: Comprimento incompatível ou entradas não finitas.
        """
        arr = self._require_length(group, values)
        self._require_tabulable(group)
        logger.debug("Applying dense transform", operation="apply_dense", order=group.order)
        return self._streamed_product(group, arr, conjugate=False)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def inverse_dense(self, group: AbelianGroup, values: np.ndarray) -> np.ndarray:
        """Aplica F† (F é simétrica, então F† = conj(F))."""
        arr = self._require_length(group, values)
        self._require_tabulable(group)
        return self._streamed_product(group, arr, conjugate=True)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def fourier_basis_state(self, group: AbelianGroup, label: GroupElement) -> np.ndarray:
        """|χ_k⟩ com componente conj(χ_k(g))/√|G| na posição g."""
        return self.character_vector(group, label).conj() / math.sqrt(group.order)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def shift_vector(self, group: AbelianGroup, shift: GroupElement, values: np.ndarray) -> np.ndarray:
        """U(k): a componente em g + k recebe a componente de entrada em g (permutação exata)."""
        arr = self._require_length(group, values)
        self._require_tabulable(group)
        k = self._groups.index_of_element(group, shift)
        targets = group.add_indices(np.arange(group.order, dtype=np.int64), k)
        result = np.empty_like(arr)
        result[targets] = arr
        return result
