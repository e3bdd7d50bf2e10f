"""Unit tests for GroupService (src.services.group_service)."""

import cmath
import math

import numpy as np
import pytest

from src.core.exceptions import ApplicationServiceError
from src.models.group import AbelianGroup, GroupElement, Subgroup
from src.services.group_service import GroupService, coset_minimum


def test_make_group_success(group_service: GroupService) -> None:
    """Valid moduli build a group with the expected order."""
    group = group_service.make_group([2, 3])
    assert group.moduli == (2, 3)
    assert group.order == 6


@pytest.mark.parametrize("moduli", [[], [3, 0], [-2]])
def test_make_group_invalid_raises(group_service: GroupService, moduli: list[int]) -> None:
    """Moduli below 2 or an empty list are rejected with INVALID_GROUP."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.make_group(moduli)
    assert exc_info.value.error_code == "INVALID_GROUP"
    assert exc_info.value.exit_code == 1


def test_make_group_too_large(group_service: GroupService) -> None:
    """An order past the group size cap is rejected with GROUP_TOO_LARGE."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.make_group([2**40, 2**40])
    assert exc_info.value.error_code == "GROUP_TOO_LARGE"


@pytest.mark.parametrize(
    ("spec", "moduli"),
    [
        ("Z4", (4,)),
        ("Z2xZ3", (2, 3)),
        ("Z2^3", (2, 2, 2)),
        ("Z2^2xZ3", (2, 2, 3)),
        (" Z15 ", (15,)),
    ],
)
def test_parse_group_spec(group_service: GroupService, spec: str, moduli: tuple[int, ...]) -> None:
    """Group specs parse into their moduli, exponents expanded."""
    assert group_service.parse_group_spec(spec).moduli == moduli


@pytest.mark.parametrize(("spec", "token"), [("Z4xY3", "Y3"), ("Z2^0", "Z2^0"), ("Z0", "Z0"), ("Z4x", "")])
def test_parse_group_spec_names_offending_token(group_service: GroupService, spec: str, token: str) -> None:
    """A malformed spec names the token that failed to parse."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.parse_group_spec(spec)
    assert exc_info.value.error_code == "GROUP_SPEC_ERROR"
    assert f"'{token}'" in exc_info.value.message


def test_format_group_spec_collapses_runs(group_service: GroupService) -> None:
    """Adjacent equal moduli are written with an exponent."""
    assert group_service.format_group_spec(AbelianGroup(moduli=(2, 2, 2, 3))) == "Z2^3xZ3"
    assert group_service.format_group_spec(AbelianGroup(moduli=(4,))) == "Z4"
    assert group_service.format_group_spec(AbelianGroup(moduli=(2, 3, 2))) == "Z2xZ3xZ2"


def test_element_index_bijection(group_service: GroupService, z2_z3: AbelianGroup) -> None:
    """Index to element and back is the identity."""
    for index in range(z2_z3.order):
        element = group_service.element_from_index(z2_z3, index)
        assert group_service.index_of_element(z2_z3, element) == index


def test_element_out_of_range(group_service: GroupService, z2_z3: AbelianGroup) -> None:
    """Indices and coordinates outside the group are rejected."""
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.element_from_index(z2_z3, 6)
    assert exc_info.value.error_code == "ELEMENT_OUT_OF_RANGE"
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.index_of_element(z2_z3, GroupElement(coords=(0, 3)))
    assert exc_info.value.error_code == "ELEMENT_OUT_OF_RANGE"


def test_element_add_and_order(group_service: GroupService) -> None:
    """Addition is coordinatewise modular and element order is the lcm of coordinate orders."""
    group = AbelianGroup(moduli=(4, 6))
    total = group_service.element_add(group, GroupElement(coords=(3, 5)), GroupElement(coords=(2, 4)))
    assert total.coords == (1, 3)
    assert group_service.element_order(group, GroupElement(coords=(2, 4))) == 6
    assert group_service.element_order(group, GroupElement(coords=(0, 0))) == 1


def test_character_eval_values(group_service: GroupService) -> None:
    """Characters take the expected roots of unity."""
    z4 = AbelianGroup(moduli=(4,))
    value = group_service.character_eval(z4, GroupElement(coords=(1,)), GroupElement(coords=(1,)))
    assert abs(value - 1j) < 1e-12
    group = AbelianGroup(moduli=(2, 3))
    value = group_service.character_eval(group, GroupElement(coords=(1, 1)), GroupElement(coords=(1, 2)))
    assert abs(value - cmath.exp(2j * math.pi * (1 / 2 + 2 / 3))) < 1e-12


def test_characters_are_symmetric_and_multiplicative(group_service: GroupService) -> None:
    """chi_a(b) equals chi_b(a) and chi_a is a homomorphism."""
    group = AbelianGroup(moduli=(4, 6))
    a, b, c = (GroupElement(coords=x) for x in [(1, 5), (3, 2), (2, 3)])
    assert abs(group_service.character_eval(group, a, b) - group_service.character_eval(group, b, a)) < 1e-12
    left = group_service.character_eval(group, a, group_service.element_add(group, b, c))
    right = group_service.character_eval(group, a, b) * group_service.character_eval(group, a, c)
    assert abs(left - right) < 1e-12


def test_subgroup_from_generators(group_service: GroupService) -> None:
    """Generated subgroups are closed and the empty set generates the trivial subgroup."""
    z12 = AbelianGroup(moduli=(12,))
    subgroup = group_service.subgroup_from_generators(z12, [GroupElement(coords=(8,)), GroupElement(coords=(6,))])
    assert subgroup.members == (0, 2, 4, 6, 8, 10)
    assert group_service.subgroup_from_generators(z12, []).members == (0,)


def test_subgroup_from_indices_in_product_group(group_service: GroupService) -> None:
    """A single element of order 2 generates a two-element subgroup."""
    group = AbelianGroup(moduli=(2, 4))
    subgroup = group_service.subgroup_from_indices(group, [group.index_of((1, 2))])
    assert subgroup.members == (0, group.index_of((1, 2)))


def test_subgroup_generators_are_coordinates(group_service: GroupService) -> None:
    """Subgroup generators come back as coordinate tuples."""
    group = AbelianGroup(moduli=(2, 4))
    subgroup = group_service.subgroup_from_indices(group, [1, 4])
    generators = group_service.subgroup_generators(subgroup)
    assert [g.coords for g in generators] == [(0, 1), (1, 0)]


def test_coset_decompose_partitions_group(group_service: GroupService) -> None:
    """Cosets are disjoint and cover the group."""
    group = AbelianGroup(moduli=(2, 6))
    subgroup = group_service.subgroup_from_indices(group, [group.index_of((1, 3))])
    decomposition = group_service.coset_decompose(group, subgroup)
    assert decomposition.index == 6
    assert len(decomposition.representatives) * subgroup.order == group.order
    seen: list[int] = []
    for coset in range(decomposition.index):
        members = decomposition.coset_members(coset).tolist()
        assert int(min(members)) == decomposition.representatives[coset]
        seen.extend(members)
    assert sorted(seen) == list(range(group.order))
    for element in range(group.order):
        coset, position = decomposition.membership(element)
        rebuilt = group.add_indices(decomposition.representatives[coset], subgroup.members[position])
        assert int(rebuilt) == element


def test_coset_decompose_rejects_foreign_subgroup(group_service: GroupService) -> None:
    """A subgroup of another group cannot be decomposed against."""
    subgroup = Subgroup(parent=AbelianGroup(moduli=(4,)), members=(0, 2))
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.coset_decompose(AbelianGroup(moduli=(8,)), subgroup)
    assert exc_info.value.error_code == "SUBGROUP_ERROR"


def test_coset_minimum_matches_bruteforce() -> None:
    """The coset minimum table agrees with explicit enumeration."""
    group = AbelianGroup(moduli=(4, 6))
    generators = [group.index_of((2, 3)), group.index_of((0, 4))]
    minimum = coset_minimum(group, generators)
    members = [0]
    for g in generators:
        grown = set(members)
        frontier = list(members)
        while frontier:
            nxt = []
            for m in frontier:
                s = int(group.add_indices(m, g))
                if s not in grown:
                    grown.add(s)
                    nxt.append(s)
            frontier = nxt
        members = sorted(grown)
    for element in range(group.order):
        coset = [int(group.add_indices(element, h)) for h in members]
        assert minimum[element] == min(coset)


@pytest.mark.parametrize(("moduli", "count"), [((12,), 6), ((2, 2), 5), ((2, 4), 8), ((3, 3), 6), ((1,), 1)])
def test_enumerate_subgroups_counts(group_service: GroupService, moduli: tuple[int, ...], count: int) -> None:
    """Subgroup counts match the known values, trivial first and whole group last."""
    subgroups = group_service.enumerate_subgroups(AbelianGroup(moduli=moduli))
    assert len(subgroups) == count
    assert subgroups[0].members == (0,)
    assert subgroups[-1].order == math.prod(moduli)


def test_subgroup_scale_cap(monkeypatch: pytest.MonkeyPatch, group_service: GroupService) -> None:
    """Enumeration refuses groups past SUBGROUP_ORDER_CAP."""
    monkeypatch.setenv("SUBGROUP_ORDER_CAP", "16")
    with pytest.raises(ApplicationServiceError) as exc_info:
        group_service.enumerate_subgroups(AbelianGroup(moduli=(32,)))
    assert exc_info.value.error_code == "SIZE_CAP_EXCEEDED"


def test_generated_subgroup_closed_under_negation(group_service: GroupService) -> None:
    """A generated subgroup contains the inverse of each member."""
    group = AbelianGroup(moduli=(3, 9))
    subgroup = group_service.subgroup_from_indices(group, [group.index_of((1, 3))])
    negated = np.sort(group.negate_indices(subgroup.member_array()))
    assert np.array_equal(negated, subgroup.member_array())
