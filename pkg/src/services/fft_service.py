import math
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from pydantic import ValidationError

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.models.fft import FFTMethod, OpCountReport, SubgroupTower
from src.models.group import AbelianGroup, Subgroup
from src.services.fourier_service import FourierService, phase_block, roots_of_unity
from src.services.group_service import GroupService, coset_minimum
from src.utils.logger import get_logger

logger = get_logger(__name__)


def smallest_prime_factor(value: int) -> int:
    candidate = 2
    while candidate * candidate <= value:
        if value % candidate == 0:
            return candidate
        candidate += 1
    return value


def power_of_two_exponent(length: int) -> int | None:
    """Retorna n com 2^n = length, ou None se length não for potência de dois."""
    if length < 1 or length & (length - 1):
        return None
    return length.bit_length() - 1


@lru_cache(maxsize=32)
def radix2_twiddles(m: int, renormalise_every: int) -> np.ndarray:
    """w^j / √2 para j < 2^{m−1}, w = exp(2πi / 2^m).

    Potências obtidas por multiplicação sucessiva, renormalizando o módulo a
    cada `renormalise_every` passos (o intervalo faz parte da chave do cache).
    """
    half = 1 << (m - 1)
    w = complex(math.cos(2 * math.pi / (1 << m)), math.sin(2 * math.pi / (1 << m)))
    powers = np.empty(half, dtype=np.complex128)
    current = 1 + 0j
    for j in range(half):
        powers[j] = current
        current *= w
        if (j + 1) % renormalise_every == 0:
            current /= abs(current)
    scaled = powers / math.sqrt(2)
    scaled.setflags(write=False)
    return scaled


def _character_classes(group: AbelianGroup, subgroup: Subgroup) -> tuple[np.ndarray, np.ndarray]:
    """Agrupa os rótulos de G pela restrição do caractere a H.

    Returns:
        tuple: (classe de cada rótulo, rótulo representante de cada classe).
    """
    generators = subgroup.generators()
    if not generators:
        return np.zeros(group.order, dtype=np.int64), np.zeros(1, dtype=np.int64)
    everything = np.arange(group.order, dtype=np.int64)
    phases = phase_block(group, everything, np.asarray(generators, dtype=np.int64))
    _, first, inverse = np.unique(phases, axis=0, return_index=True, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64), first.astype(np.int64)


class FFTService:
    """Transformadas rápidas com contagem exata de operações.

    Todas as transformadas aceitam um vetor (N,) ou um lote de colunas (N, B);
    as contagens reportadas são sempre por vetor.
    """

    SERVICE_NAME = "FFTService"

    def __init__(self, group_service: GroupService, fourier_service: FourierService) -> None:
        self._groups = group_service
        self._fourier = fourier_service

    def _as_vectors(self, values: np.ndarray, length: int) -> np.ndarray:
        arr = np.asarray(values, dtype=np.complex128)
        if arr.ndim == 0 or arr.shape[0] != length:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Vector length {arr.shape[0] if arr.ndim else 0} does not match expected length {length}",
                error_code="LENGTH_MISMATCH",
            )
        return arr

    def _require_power_of_two(self, n: int, values: np.ndarray) -> np.ndarray:
        arr = np.asarray(values, dtype=np.complex128)
        length = arr.shape[0] if arr.ndim else 0
        if power_of_two_exponent(length) is None:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Vector length {length} is not a power of two",
                error_code="NOT_POWER_OF_TWO",
            )
        return self._as_vectors(arr, 1 << n)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="NON_DIVISOR")
    def predict_cost(self, group_order: int, subgroup_order: int) -> int:
        """|G|·(|H| + |G|/|H|), o custo O(|G|(|H| + I)) com constante 1.

        Raises:
            ApplicationServiceError: Se |H| não dividir |G|.
        """
        if subgroup_order < 1 or group_order % subgroup_order != 0:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Subgroup order {subgroup_order} does not divide group order {group_order}",
                error_code="NON_DIVISOR",
            )
        return group_order * (subgroup_order + group_order // subgroup_order)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_TOWER")
    def make_tower(self, group: AbelianGroup, levels: Sequence[Subgroup]) -> SubgroupTower:
        """Valida uma torre explícita; acrescenta {0} ao final quando omitido."""
        levels = list(levels)
        if group.order > 1 and (not levels or levels[-1].order != 1):
            levels.append(Subgroup(parent=group, members=(0,)))
        try:
            return SubgroupTower(group=group, levels=tuple(levels))
        except ValidationError as err:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Invalid subgroup tower: {err.errors()[0]['msg']}",
                error_code="INVALID_TOWER",
            ) from err

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_TOWER")
    def build_tower(self, group: AbelianGroup) -> SubgroupTower:
        """Torre automática: remove um primo de um fator por nível.

        Para Z_{2^n} resulta na cadeia de índice 2 (Z_{2^n} ⊃ 2Z ⊃ 4Z ⊃ … ⊃ {0}).
        """
        table = group.coordinate_table()
        divisors = [1] * group.rank
        levels: list[Subgroup] = []
        for position, modulus in enumerate(group.moduli):
            while divisors[position] < modulus:
                divisors[position] *= smallest_prime_factor(modulus // divisors[position])
                mask = np.all(table % np.asarray(divisors, dtype=np.int64) == 0, axis=1)
                levels.append(Subgroup(parent=group, members=tuple(np.flatnonzero(mask).tolist())))
        logger.debug("Tower built", operation="build_tower", orders=[level.order for level in levels])
        return SubgroupTower(group=group, levels=tuple(levels))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="LENGTH_MISMATCH")
    def fft_dense(self, group: AbelianGroup, values: np.ndarray) -> tuple[np.ndarray, OpCountReport]:
        """Oráculo denso com contagem: |G|² multiplicações e |G|(|G| − 1) somas."""
        arr = self._as_vectors(values, group.order)
        spectrum = self._fourier.apply_dense(group, arr)
        order = group.order
        report = OpCountReport(
            complex_multiplies=order * order,
            complex_adds=order * (order - 1),
            predicted_bound=order * order,
        )
        return spectrum, report

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_TOWER")
    def fft_tower(
        self, group: AbelianGroup, tower: SubgroupTower, values: np.ndarray
    ) -> tuple[np.ndarray, OpCountReport]:
        """Recursão de Cooley–Tukey sobre uma torre de subgrupos.

        f̃(l) = (1/√|G|) Σ_i χ_l(k_i) Σ_h f(k_i + h) χ_l(h), aplicada de baixo
        para cima. No nível j guarda-se S_j[c, κ] = Σ_{h∈H_j} χ_l(h) f(c + h)
        para cada representante c de G/H_j e cada classe κ de caracteres
        restritos a H_j (|G/H_j|·|H_j| = |G| entradas por nível).

        Args:
            group: Grupo G.
            tower: Torre G ⊃ H_1 ⊃ … ⊃ {0}.
            values: Vetor(es) de comprimento |G|.

        Returns:
            tuple: (espectro, contagem). Cada nível custa |G|·I_j multiplicações
            e |G|·(I_j − 1) somas; a normalização final não é contada.
        """
        if tower.group != group:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message="Tower was built for a different group",
                error_code="INVALID_TOWER",
            )
        arr = self._as_vectors(values, group.order)
        batch = arr.shape[1:]
        if not tower.levels:
            return arr.copy(), OpCountReport(complex_multiplies=0, complex_adds=0, predicted_bound=0)

        chain = [Subgroup(parent=group, members=tuple(range(group.order))), *tower.levels]
        roots = roots_of_unity(group.exponent)

        # Representantes de H_{j+1} dentro de H_j, e de G/H_j acumulados.
        steps: list[np.ndarray] = []
        cosets = np.zeros(1, dtype=np.int64)
        for upper, lower in zip(chain, chain[1:], strict=False):
            minimum = coset_minimum(group, lower.generators())
            step = np.unique(minimum[upper.member_array()])
            steps.append(step)
            cosets = group.add_indices(cosets[:, None], step[None, :]).reshape(-1)

        classes = [_character_classes(group, level) for level in chain]

        partial = arr[cosets].reshape(group.order, 1, *batch)
        multiplies = 0
        adds = 0
        for j in range(len(steps) - 1, -1, -1):
            step = steps[j]
            index = step.size
            class_of, class_labels = classes[j]
            below_class_of, _ = classes[j + 1]
            twiddles = roots[phase_block(group, class_labels, step)]
            blocks = partial.reshape(group.order // (index * chain[j + 1].order), index, chain[j + 1].order, *batch)
            gathered = blocks[:, :, below_class_of[class_labels]]
            partial = np.einsum("cbk...,kb->ck...", gathered, twiddles)
            multiplies += group.order * index
            adds += group.order * (index - 1)

        class_of, _ = classes[0]
        spectrum = partial[0, class_of] / math.sqrt(group.order)
        report = OpCountReport(
            complex_multiplies=multiplies,
            complex_adds=adds,
            predicted_bound=self.predict_cost(group.order, tower.levels[0].order),
        )
        logger.info(
            "Transform finished",
            operation="fft_tower",
            order=group.order,
            levels=len(tower.levels),
            multiplies=multiplies,
        )
        return spectrum, report

    def _radix2_recursive(self, blocks: np.ndarray, m: int, siblings: int, tally: list[int]) -> np.ndarray:
        # blocks: (..., 2^m); os `siblings` subproblemas irmãos de um vetor são processados juntos
        if m == 0:
            return blocks.copy()
        half = 1 << (m - 1)
        split = blocks.reshape(*blocks.shape[:-1], half, 2)
        transformed = self._radix2_recursive(np.moveaxis(split, -1, -2), m - 1, 2 * siblings, tally)
        even = transformed[..., 0, :] / math.sqrt(2)
        odd = radix2_twiddles(m, get_settings().twiddle_renormalise_every) * transformed[..., 1, :]
        tally[0] += siblings * (half + half)
        tally[1] += siblings * (half + half)
        return np.concatenate([even + odd, even - odd], axis=-1)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="NOT_POWER_OF_TWO")
    def fft_radix2(self, n: int, values: np.ndarray) -> tuple[np.ndarray, OpCountReport]:
        """FFT radix-2 em Z_{2^n} pela divisão par/ímpar.

        f̃(j) = (E(j) + w^j O(j))/√2 e f̃(j + 2^{m−1}) = (E(j) − w^j O(j))/√2,
        com w = exp(2πi/2^m) no nível m. Cada subproblema de tamanho 2^m custa
        2^m multiplicações (E/√2 e w^j/√2 · O) e 2^m somas, logo
        count(2^m) = 2·count(2^{m−1}) + 2^m, isto é, count(2^n) = n·2^n.
        """
        arr = self._require_power_of_two(n, values)
        tally = [0, 0]
        spectrum = np.moveaxis(self._radix2_recursive(np.moveaxis(arr, 0, -1), n, 1, tally), -1, 0)
        report = OpCountReport(
            complex_multiplies=tally[0],
            complex_adds=tally[1],
            predicted_bound=n * (1 << n),
        )
        logger.info("Transform finished", operation="fft_radix2", size=1 << n, multiplies=tally[0])
        return spectrum, report

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="NOT_POWER_OF_TWO")
    def walsh_hadamard_counted(self, n: int, values: np.ndarray) -> tuple[np.ndarray, OpCountReport]:
        """Walsh–Hadamard em (Z_2)^n: uma borboleta por bit, n·2^n somas, escala final 2^{−n/2}."""
        arr = self._require_power_of_two(n, values)
        batch = arr.shape[1:]
        work = arr.copy()
        adds = 0
        for bit in range(n):
            stride = 1 << bit
            shaped = work.reshape((1 << n) // (2 * stride), 2, stride, *batch)
            low = shaped[:, 0]
            high = shaped[:, 1]
            work = np.stack([low + high, low - high], axis=1).reshape(1 << n, *batch)
            adds += 1 << n
        size = 1 << n
        report = OpCountReport(complex_multiplies=size, complex_adds=adds, predicted_bound=n * size)
        return work / math.sqrt(size), report

    def walsh_hadamard(self, n: int, values: np.ndarray) -> np.ndarray:
        """Walsh–Hadamard sem a contagem."""
        spectrum, _ = self.walsh_hadamard_counted(n, values)
        return spectrum

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SIZE_CAP_EXCEEDED")
    def check_transform_size(self, group: AbelianGroup) -> None:
        """Recusa grupos cujo vetor de |G| entradas passa de `max_transform_length`."""
        cap = get_settings().max_transform_length
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the transform length cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="METHOD_GROUP_MISMATCH")
    def transform(
        self, group: AbelianGroup, values: np.ndarray, method: FFTMethod
    ) -> tuple[np.ndarray, OpCountReport]:
        """Despacha para o método pedido, verificando se ele se aplica ao grupo.

        Raises:
            ApplicationServiceError: comprimento errado (LENGTH_MISMATCH), |G| acima
                de max_transform_length, radix2 fora de Z_{2^n}, walsh fora de (Z_2)^n.
        """
        values = self._as_vectors(values, group.order)
        self.check_transform_size(group)
        if method == FFTMethod.DENSE:
            return self.fft_dense(group, values)
        if method == FFTMethod.TOWER:
            return self.fft_tower(group, self.build_tower(group), values)
        if method == FFTMethod.RADIX2:
            n = power_of_two_exponent(group.order)
            if group.rank != 1 or n is None:
                raise ApplicationServiceError(
                    service_name=self.SERVICE_NAME,
                    message=f"Method radix2 needs a cyclic group Z_(2^n), got moduli {list(group.moduli)}",
                    error_code="METHOD_GROUP_MISMATCH",
                )
            return self.fft_radix2(n, values)
        if any(m != 2 for m in group.moduli) and group.order != 1:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Method walsh needs (Z_2)^n, got moduli {list(group.moduli)}",
                error_code="METHOD_GROUP_MISMATCH",
            )
        n = power_of_two_exponent(group.order) or 0
        return self.walsh_hadamard_counted(n, values)
