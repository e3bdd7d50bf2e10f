import argparse

from src.commands.arguments import positive_int
from src.commands.period_find import DEFAULT_SHOTS
from src.factories.controller_factory import make_period_controller
from src.models.hsp import SamplingMode, SimonResponse
from src.models.run_config import RunConfig, Subcommand


def handle(args: argparse.Namespace, config: RunConfig) -> SimonResponse:
    return make_period_controller().simon(config, args.n, args.mask, args.shots, SamplingMode(args.mode))


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.SIMON.value, parents=parents, help="problema de Simon com máscara conhecida"
    )
    parser.add_argument("--n", type=positive_int, required=True, help="número de bits")
    parser.add_argument("--mask", required=True, help="máscara como cadeia de n bits, ex. 101")
    parser.add_argument("--shots", type=positive_int, default=DEFAULT_SHOTS, help="máximo de amostras")
    parser.add_argument("--mode", choices=[m.value for m in SamplingMode], default=SamplingMode.EXACT.value)
    parser.set_defaults(handler=handle, input_arg=None)
