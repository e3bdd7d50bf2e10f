import argparse
from pathlib import Path

from src.commands.arguments import positive_int
from src.factories.controller_factory import make_period_controller
from src.models.hsp import PeriodFindResponse, SamplingMode
from src.models.run_config import RunConfig, Subcommand

DEFAULT_SHOTS = 100


def handle(args: argparse.Namespace, config: RunConfig) -> PeriodFindResponse:
    """Recupera o estabilizador de uma função dada por tabela."""
    return make_period_controller().period_find(config, args.shots, SamplingMode(args.mode))


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.PERIOD_FIND.value, parents=parents, help="busca do subgrupo oculto de uma função tabelada"
    )
    parser.add_argument("--function", type=Path, required=True, help='tabela JSON {"group": ..., "values": [...]}')
    parser.add_argument("--shots", type=positive_int, default=DEFAULT_SHOTS, help="máximo de amostras")
    parser.add_argument("--mode", choices=[m.value for m in SamplingMode], default=SamplingMode.EXACT.value)
    parser.set_defaults(handler=handle, input_arg="function")
