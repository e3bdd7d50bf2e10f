import cmath
import math
import re
from collections.abc import Sequence

import numpy as np

from src.core.exceptions import ApplicationServiceError, handle_service_errors_sync
from src.core.settings import get_settings
from src.models.group import (
    AbelianGroup,
    CosetDecomposition,
    GroupElement,
    Subgroup,
    extend_span,
    span_indices,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

_FACTOR_PATTERN = re.compile(r"Z(\d+)(?:\^(\d+))?")


def coset_minimum(group: AbelianGroup, generators: Sequence[int]) -> np.ndarray:
    """Para cada g, o menor índice da classe lateral g + <generators>.

    Usa duplicação por gerador: após k passos cada posição conhece o mínimo
    sobre g + {0, …, 2^k − 1}·t, o que cobre a órbita cíclica inteira.
    """
    everything = np.arange(group.order, dtype=np.int64)
    values = everything.copy()
    for generator in generators:
        order = element_order_of_index(group, generator)
        step = int(generator)
        covered = 1
        while covered < order:
            shifted = group.add_indices(everything, step)
            values = np.minimum(values, values[shifted])
            step = int(group.add_indices(step, step))
            covered *= 2
    return values


def element_order_of_index(group: AbelianGroup, index: int) -> int:
    """Ordem aditiva do elemento de índice `index`."""
    orders = (m // math.gcd(a, m) for a, m in zip(group.coords_of(int(index)), group.moduli, strict=True))
    return math.lcm(*orders)


class GroupService:
    SERVICE_NAME = "GroupService"

    def _require_subgroup_scale(self, group: AbelianGroup) -> None:
        cap = get_settings().subgroup_order_cap
        if group.order > cap:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {group.order} exceeds the subgroup operation cap {cap}",
                error_code="SIZE_CAP_EXCEEDED",
            )

    def _require_same_parent(self, group: AbelianGroup, subgroup: Subgroup) -> None:
        if subgroup.parent != group:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=(
                    f"Subgroup belongs to {self.format_group_spec(subgroup.parent)}, "
                    f"not {self.format_group_spec(group)}"
                ),
                error_code="SUBGROUP_ERROR",
            )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="INVALID_GROUP")
    def make_group(self, moduli: Sequence[int]) -> AbelianGroup:
        """Cria o grupo Z_{m_1} × … × Z_{m_r}.

        Args:
            moduli: Módulos, cada um ≥ 1.

        Returns:
            AbelianGroup: Grupo com indexação em base mista (primeiro módulo mais significativo).

        Raises:
            ApplicationServiceError: Sequência vazia, módulo < 1 ou ordem acima do inteiro da plataforma.
        """
        moduli = tuple(int(m) for m in moduli)
        if not moduli:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message="A group needs at least one modulus",
                error_code="INVALID_GROUP",
            )
        bad = [m for m in moduli if m < 1]
        if bad:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Every modulus must be >= 1, got {bad[0]}",
                error_code="INVALID_GROUP",
            )
        order = math.prod(moduli)
        max_order = get_settings().max_group_order
        if order > max_order:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Group order {order} overflows the platform integer bound {max_order}",
                error_code="GROUP_TOO_LARGE",
            )
        group = AbelianGroup(moduli=moduli)
        logger.debug("Group created", operation="make_group", moduli=list(moduli), order=order)
        return group

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="GROUP_SPEC_ERROR")
    def parse_group_spec(self, spec: str) -> AbelianGroup:
        """Interpreta especificações como "Z4", "Z2xZ3" ou "Z2^3xZ5".

        Args:
            spec: Texto da especificação.

        Returns:
            AbelianGroup: Grupo correspondente ("Z2^3" expande para três fatores Z2).

        Raises:
            ApplicationServiceError: Nomeando o token inválido.
        """
        moduli: list[int] = []
        for token in spec.strip().split("x"):
            match = _FACTOR_PATTERN.fullmatch(token.strip())
            if match is None:
                raise ApplicationServiceError(
                    service_name=self.SERVICE_NAME,
                    message=f"Invalid group spec token '{token}' in '{spec}' (expected Z<m> or Z<m>^<k>)",
                    error_code="GROUP_SPEC_ERROR",
                )
            modulus = int(match.group(1))
            repeat = int(match.group(2)) if match.group(2) is not None else 1
            if modulus < 1 or repeat < 1:
                raise ApplicationServiceError(
                    service_name=self.SERVICE_NAME,
                    message=f"Invalid group spec token '{token}' in '{spec}' (modulus and exponent must be >= 1)",
                    error_code="GROUP_SPEC_ERROR",
                )
            moduli.extend([modulus] * repeat)
        return self.make_group(moduli)

    def format_group_spec(self, group: AbelianGroup) -> str:
        """Forma canônica do texto: fatores repetidos consecutivos viram Z<m>^<k>."""
        tokens: list[str] = []
        position = 0
        while position < group.rank:
            modulus = group.moduli[position]
            run = 1
            while position + run < group.rank and group.moduli[position + run] == modulus:
                run += 1
            tokens.append(f"Z{modulus}" if run == 1 else f"Z{modulus}^{run}")
            position += run
        return "x".join(tokens)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def element_from_index(self, group: AbelianGroup, index: int) -> GroupElement:
        """Converte índice em elemento (bijeção de base mista)."""
        if not 0 <= index < group.order:
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Element index {index} out of range for group of order {group.order}",
                error_code="ELEMENT_OUT_OF_RANGE",
            )
        return GroupElement(coords=group.coords_of(index))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def index_of_element(self, group: AbelianGroup, element: GroupElement) -> int:
        """Valida o elemento e retorna seu índice.

        Raises:
            ApplicationServiceError: Se o número de coordenadas ou alguma coordenada for inválida.
        """
        if not element.is_valid_for(group):
            raise ApplicationServiceError(
                service_name=self.SERVICE_NAME,
                message=f"Element {list(element.coords)} is not valid for moduli {list(group.moduli)}",
                error_code="ELEMENT_OUT_OF_RANGE",
            )
        return group.index_of(element.coords)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def element_add(self, group: AbelianGroup, a: GroupElement, b: GroupElement) -> GroupElement:
        """Soma componente a componente (a_i + b_i) mod m_i."""
        self.index_of_element(group, a)
        self.index_of_element(group, b)
        coords = tuple((x + y) % m for x, y, m in zip(a.coords, b.coords, group.moduli, strict=True))
        return GroupElement(coords=coords)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def element_order(self, group: AbelianGroup, element: GroupElement) -> int:
        """Menor n ≥ 1 com n·g = 0."""
        return element_order_of_index(group, self.index_of_element(group, element))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="ELEMENT_OUT_OF_RANGE")
    def character_eval(self, group: AbelianGroup, label: GroupElement, arg: GroupElement) -> complex:
        """Avalia χ_label(arg) = exp(2πi Σ_i l_i a_i / m_i).

        A fase é reduzida em aritmética inteira exata sobre L = mmc(m_i) antes
        da exponenciação, então |χ| = 1 até o arredondamento de uma única exp.

        Args:
            group: Grupo.
            label: Rótulo l do caractere.
            arg: Argumento a.

        Returns:
            complex: Valor do caractere.
        """
        self.index_of_element(group, label)
        self.index_of_element(group, arg)
        exponent = group.exponent
        triples = zip(label.coords, arg.coords, group.moduli, strict=True)
        numerator = sum(((l_i * a_i) % m) * (exponent // m) for l_i, a_i, m in triples)
        return cmath.exp(2j * math.pi * (numerator % exponent) / exponent)

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def subgroup_from_generators(self, group: AbelianGroup, generators: Sequence[GroupElement]) -> Subgroup:
        """Menor subgrupo que contém os geradores (fecho aditivo).

        Args:
            group: Grupo pai.
            generators: Geradores (pode ser vazio, resultando em {0}).

        Returns:
            Subgroup: Subgrupo com membros ordenados.
        """
        self._require_subgroup_scale(group)
        indices = [self.index_of_element(group, g) for g in generators]
        members = span_indices(group, indices)
        logger.debug("Subgroup spanned", operation="subgroup_from_generators", generators=indices, order=members.size)
        return Subgroup(parent=group, members=tuple(members.tolist()))

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def subgroup_from_indices(self, group: AbelianGroup, generator_indices: Sequence[int]) -> Subgroup:
        """Mesmo que subgroup_from_generators, com geradores dados por índice."""
        self._require_subgroup_scale(group)
        for index in generator_indices:
            self.element_from_index(group, index)
        members = span_indices(group, generator_indices)
        return Subgroup(parent=group, members=tuple(members.tolist()))

    def subgroup_generators(self, subgroup: Subgroup) -> list[GroupElement]:
        """Conjunto gerador guloso (menor membro ainda não gerado primeiro)."""
        return [GroupElement(coords=subgroup.parent.coords_of(g)) for g in subgroup.generators()]

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def coset_decompose(self, group: AbelianGroup, subgroup: Subgroup) -> CosetDecomposition:
        """Particiona G nas classes laterais de H.

        Args:
            group: Grupo G.
            subgroup: Subgrupo H de G.

        Returns:
            CosetDecomposition: I = |G|/|H| classes, representante = menor índice da classe.
        """
        self._require_same_parent(group, subgroup)
        self._require_subgroup_scale(group)
        everything = np.arange(group.order, dtype=np.int64)
        minimum = coset_minimum(group, subgroup.generators())
        representatives = np.unique(minimum)
        coset_of = np.searchsorted(representatives, minimum)
        offsets = group.add_indices(everything, group.negate_indices(minimum))
        position = np.searchsorted(subgroup.member_array(), offsets)
        logger.debug(
            "Cosets decomposed",
            operation="coset_decompose",
            group_order=group.order,
            subgroup_order=subgroup.order,
            index=representatives.size,
        )
        return CosetDecomposition(
            subgroup=subgroup,
            representatives=tuple(representatives.tolist()),
            coset_of=tuple(coset_of.tolist()),
            position_in_subgroup=tuple(position.tolist()),
        )

    @handle_service_errors_sync(service_name=SERVICE_NAME, error_code="SUBGROUP_ERROR")
    def enumerate_subgroups(self, group: AbelianGroup) -> list[Subgroup]:
        """Todos os subgrupos de G, ordenados por (ordem, membros).

        Busca em largura a partir de {0}, estendendo cada subgrupo por um
        representante de cada classe lateral não trivial.
        """
        self._require_subgroup_scale(group)
        trivial = np.zeros(1, dtype=np.int64)
        seen: dict[bytes, np.ndarray] = {trivial.tobytes(): trivial}
        frontier = [trivial]
        while frontier:
            next_frontier: list[np.ndarray] = []
            for members in frontier:
                in_members = np.zeros(group.order, dtype=bool)
                in_members[members] = True
                for candidate in np.flatnonzero(~in_members):
                    extended = extend_span(group, members, int(candidate))
                    key = extended.tobytes()
                    if key not in seen:
                        seen[key] = extended
                        next_frontier.append(extended)
            frontier = next_frontier
        subgroups = sorted(seen.values(), key=lambda m: (m.size, m.tolist()))
        logger.debug("Subgroups enumerated", operation="enumerate_subgroups", count=len(subgroups))
        return [Subgroup(parent=group, members=tuple(m.tolist())) for m in subgroups]
