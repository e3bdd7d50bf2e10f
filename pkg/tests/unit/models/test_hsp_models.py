"""Unit tests for hidden-subgroup models (src.models.hsp) and RunConfig."""

import pytest
from pydantic import ValidationError

from src.models.group import AbelianGroup
from src.models.hsp import FunctionTable, FunctionTablePayload
from src.models.run_config import RunConfig, Subcommand


def test_function_table_length_must_match_group_order() -> None:
    """A table must have one value per group element."""
    group = AbelianGroup(moduli=(4,))
    assert FunctionTable(group=group, values=(0, 1, 0, 1)).values == (0, 1, 0, 1)
    with pytest.raises(ValidationError, match="group order is 4"):
        FunctionTable(group=group, values=(0, 1, 0))


def test_function_table_payload_requires_group_and_values() -> None:
    """Both group and values are required and the group may not be empty."""
    with pytest.raises(ValidationError):
        FunctionTablePayload.model_validate({"group": "Z4"})
    with pytest.raises(ValidationError):
        FunctionTablePayload.model_validate({"group": "", "values": [1]})


def test_run_config_default_seed_is_fixed() -> None:
    """Without flags, the seed and tolerance defaults are fixed."""
    first = RunConfig(subcommand=Subcommand.FFT)
    second = RunConfig(subcommand=Subcommand.FFT)
    assert first.seed == second.seed == 0x5EED
    assert first.tolerance == 1e-9


def test_run_config_default_seed_follows_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    """DEFAULT_SEED is the default seed."""
    monkeypatch.setenv("DEFAULT_SEED", "7")
    assert RunConfig(subcommand=Subcommand.SIMON).seed == 7


def test_run_config_rejects_out_of_range_seed() -> None:
    """Seeds must fit in an unsigned 64-bit integer."""
    with pytest.raises(ValidationError):
        RunConfig(subcommand=Subcommand.BENCH, seed=2**64)
    with pytest.raises(ValidationError):
        RunConfig(subcommand=Subcommand.BENCH, seed=-1)


def test_run_config_default_tolerance_follows_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    """ORACLE_TOLERANCE is the default of --tolerance."""
    monkeypatch.setenv("ORACLE_TOLERANCE", "1e-6")
    assert RunConfig(subcommand=Subcommand.BENCH).tolerance == 1e-6
