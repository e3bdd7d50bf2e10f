"""Unit tests for command_logging (src.core.middleware.command_logging)."""

import pytest

from src.core.middleware import command_logging
from src.models.run_config import RunConfig, Subcommand
from src.utils.logger import get_run_id


def test_run_id_is_set_for_the_invocation() -> None:
    """An explicit run id is bound for the duration of the command."""
    config = RunConfig(subcommand=Subcommand.QFT_COMPILE)
    with command_logging(config, run_id="fixed-id") as run_id:
        assert run_id == "fixed-id"
        assert get_run_id() == "fixed-id"


def test_run_id_is_generated() -> None:
    """Without a run id, a UUID is generated and bound."""
    with command_logging(RunConfig(subcommand=Subcommand.BENCH)) as run_id:
        assert len(run_id) == 36
        assert get_run_id() == run_id


def test_errors_propagate() -> None:
    """Exceptions raised inside the command escape the context manager."""
    with pytest.raises(RuntimeError, match="boom"):
        with command_logging(RunConfig(subcommand=Subcommand.FFT)):
            raise RuntimeError("boom")
