import math
from collections.abc import Iterable, Sequence
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


@lru_cache(maxsize=64)
def _coordinate_table(moduli: tuple[int, ...]) -> np.ndarray:
    order = math.prod(moduli)
    table = np.stack(np.unravel_index(np.arange(order, dtype=np.int64), moduli), axis=1).astype(np.int64)
    table.setflags(write=False)
    return table


class AbelianGroup(BaseModel):
    """Grupo abeliano finito apresentado como produto Z_{m_1} × … × Z_{m_r}.

    Os elementos são indexados em base mista com o PRIMEIRO módulo como dígito
    mais significativo: para Z_2 × Z_3 o índice 5 corresponde a (1, 2).
    """

    model_config = ConfigDict(frozen=True)

    moduli: tuple[int, ...] = Field(..., min_length=1, description="Módulos m_1, …, m_r (cada um ≥ 1)")

    @field_validator("moduli")
    @classmethod
    def validate_moduli(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        """Valida os módulos.

        Args:
            v: Módulos informados.

        Returns:
            tuple[int, ...]: Módulos validados.

        Raises:
            ValueError: Se algum módulo for menor que 1.
        """
        bad = [m for m in v if m < 1]
        if bad:
            raise ValueError(f"Every modulus must be >= 1, got {bad[0]}")
        return v

    @property
    def order(self) -> int:
        """|G| = produto dos módulos."""
        return math.prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def exponent(self) -> int:
        """Mínimo múltiplo comum dos módulos (denominador comum das fases)."""
        return math.lcm(*self.moduli)

    def coords_of(self, index: int) -> tuple[int, ...]:
        """Converte um índice de elemento para a tupla de coordenadas."""
        digits: list[int] = []
        for modulus in reversed(self.moduli):
            index, digit = divmod(index, modulus)
            digits.append(digit)
        return tuple(reversed(digits))

    def index_of(self, coords: Sequence[int]) -> int:
        """Converte uma tupla de coordenadas para o índice do elemento."""
        index = 0
        for coord, modulus in zip(coords, self.moduli, strict=True):
            index = index * modulus + coord
        return index

    def coordinate_table(self) -> np.ndarray:
        """Tabela (|G| × r) com as coordenadas de todos os elementos (somente leitura)."""
        return _coordinate_table(self.moduli)

    def to_coords(self, indices: np.ndarray | int) -> np.ndarray:
        arr = np.asarray(indices, dtype=np.int64)
        return np.stack(np.unravel_index(arr, self.moduli), axis=-1).astype(np.int64)

    def to_indices(self, coords: np.ndarray) -> np.ndarray:
        arr = np.asarray(coords, dtype=np.int64)
        return np.ravel_multi_index(tuple(np.moveaxis(arr, -1, 0)), self.moduli).astype(np.int64)

    def add_indices(self, a: np.ndarray | int, b: np.ndarray | int) -> np.ndarray:
        """Soma elemento a elemento (com broadcasting) de índices de elementos."""
        moduli = np.asarray(self.moduli, dtype=np.int64)
        return self.to_indices((self.to_coords(a) + self.to_coords(b)) % moduli)

    def negate_indices(self, a: np.ndarray | int) -> np.ndarray:
        moduli = np.asarray(self.moduli, dtype=np.int64)
        return self.to_indices((-self.to_coords(a)) % moduli)

    def phase_numerators(self, labels: np.ndarray | int, args: np.ndarray | int) -> np.ndarray:
        """Numerador inteiro φ com χ_label(arg) = exp(2πi φ / L), L = exponent.

        φ = Σ_i (l_i a_i mod m_i) · (L / m_i) mod L, calculado em aritmética inteira exata.
        """
        moduli = np.asarray(self.moduli, dtype=np.int64)
        weights = self.exponent // moduli
        products = (self.to_coords(labels) * self.to_coords(args)) % moduli
        return (products * weights).sum(axis=-1) % self.exponent


class GroupElement(BaseModel):
    """Elemento (a_1, …, a_r) de um AbelianGroup."""

    model_config = ConfigDict(frozen=True)

    coords: tuple[int, ...] = Field(..., min_length=1, description="Uma coordenada por módulo")

    def is_valid_for(self, group: AbelianGroup) -> bool:
        """Verifica se 0 ≤ a_i < m_i para todo i."""
        if len(self.coords) != group.rank:
            return False
        return all(0 <= a < m for a, m in zip(self.coords, group.moduli, strict=True))


def extend_span(group: AbelianGroup, members: np.ndarray, generator: int) -> np.ndarray:
    """Retorna o subgrupo gerado por `members` (já um subgrupo) e `generator`.

    Percorre as classes laterais S, g + S, 2g + S, … até voltar a S.
    """
    in_span = np.zeros(group.order, dtype=bool)
    in_span[members] = True
    if in_span[generator]:
        return members
    pieces = [members]
    shift = int(generator)
    while not in_span[shift]:
        pieces.append(group.add_indices(members, shift))
        shift = int(group.add_indices(shift, generator))
    return np.sort(np.concatenate(pieces))


def span_indices(group: AbelianGroup, generators: Iterable[int]) -> np.ndarray:
    """Fecho aditivo {0} + <generators>, como array ordenado de índices."""
    members = np.zeros(1, dtype=np.int64)
    for generator in generators:
        members = extend_span(group, members, int(generator))
    return members


def greedy_generators(group: AbelianGroup, members: np.ndarray) -> tuple[list[int], np.ndarray]:
    """Escolhe geradores gulosamente (menor membro ainda não gerado primeiro).

    Returns:
        tuple: (geradores, span gerado). O span só coincide com `members`
        quando `members` é fechado sob a soma.
    """
    member_mask = np.zeros(group.order, dtype=bool)
    member_mask[members] = True
    generators: list[int] = []
    span = np.zeros(1, dtype=np.int64)
    while True:
        span_mask = np.zeros(group.order, dtype=bool)
        span_mask[span] = True
        if not np.all(member_mask[span]):
            return generators, span
        missing = np.flatnonzero(member_mask & ~span_mask)
        if missing.size == 0:
            return generators, span
        generators.append(int(missing[0]))
        span = extend_span(group, span, int(missing[0]))


class Subgroup(BaseModel):
    """Subgrupo H de um AbelianGroup, guardado como lista ordenada de índices.

    O fechamento é verificado na construção (um subconjunto finito que contém 0
    e é fechado sob a soma também é fechado sob a negação).
    """

    model_config = ConfigDict(frozen=True)

    parent: AbelianGroup
    members: tuple[int, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def validate_closure(self) -> "Subgroup":
        """Valida identidade, ordenação, Lagrange e fechamento.

        Raises:
            ValueError: Se alguma das propriedades de subgrupo falhar.
        """
        arr = np.asarray(self.members, dtype=np.int64)
        if arr.size > 1 and np.any(arr[1:] <= arr[:-1]):
            raise ValueError("Subgroup members must be sorted and unique")
        if arr[0] != 0:
            raise ValueError("Subgroup must contain the identity (index 0)")
        if arr[0] < 0 or arr[-1] >= self.parent.order:
            raise ValueError(f"Subgroup member out of range for group of order {self.parent.order}")
        if self.parent.order % arr.size != 0:
            raise ValueError(f"Subgroup order {arr.size} does not divide group order {self.parent.order}")
        _, span = greedy_generators(self.parent, arr)
        if span.size != arr.size or not np.array_equal(span, arr):
            raise ValueError("Subgroup members are not closed under addition")
        return self

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        """Índice I = |G| / |H|."""
        return self.parent.order // self.order

    def member_array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    def contains(self, element: int) -> bool:
        position = int(np.searchsorted(self.member_array(), element))
        return position < self.order and self.members[position] == element

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.parent == other.parent and bool(np.all(np.isin(self.member_array(), other.member_array())))

    def generators(self) -> list[int]:
        """Conjunto gerador guloso e determinístico (vazio para o subgrupo trivial)."""
        generators, _ = greedy_generators(self.parent, self.member_array())
        return generators


class CosetDecomposition(BaseModel):
    """Partição de G nas classes laterais k_i + H.

    Os representantes são o menor índice de cada classe, em ordem crescente.
    """

    model_config = ConfigDict(frozen=True)

    subgroup: Subgroup
    representatives: tuple[int, ...]
    coset_of: tuple[int, ...] = Field(..., description="Índice da classe lateral de cada elemento")
    position_in_subgroup: tuple[int, ...] = Field(..., description="Índice h ∈ H com g = k_i + h")

    @model_validator(mode="after")
    def validate_partition(self) -> "CosetDecomposition":
        """Valida I·|H| = |G| e o tamanho dos mapas de pertinência."""
        group_order = self.subgroup.parent.order
        if len(self.representatives) * self.subgroup.order != group_order:
            raise ValueError("Cosets do not partition the group: I * |H| != |G|")
        if len(self.coset_of) != group_order or len(self.position_in_subgroup) != group_order:
            raise ValueError("Membership maps must cover every group element")
        return self

    @property
    def index(self) -> int:
        return len(self.representatives)

    def membership(self, element: int) -> tuple[int, int]:
        """Retorna (índice da classe, índice do membro de H) do elemento."""
        return self.coset_of[element], self.position_in_subgroup[element]

    def coset_members(self, coset: int) -> np.ndarray:
        """Elementos k_i + h na ordem dos membros de H."""
        parent = self.subgroup.parent
        return parent.add_indices(self.subgroup.member_array(), self.representatives[coset])
