import argparse
from pathlib import Path

from src.commands.arguments import measure_target, positive_int
from src.factories.controller_factory import make_simulate_controller
from src.models.circuit import SimulateResponse
from src.models.run_config import RunConfig, Subcommand


def handle(args: argparse.Namespace, config: RunConfig) -> SimulateResponse:
    """Executa um programa de portas e reporta a distribuição de medida."""
    return make_simulate_controller().run(config, measure=args.measure, shots=args.shots)


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.SIMULATE.value, parents=parents, help="simula um programa de portas de 1 e 2 qubits"
    )
    parser.add_argument("--program", type=Path, required=True, help='programa JSON {"n": ..., "steps": [...]}')
    parser.add_argument("--shots", type=positive_int, default=None, help="número de amostras")
    parser.add_argument("--measure", type=measure_target, default="all", help="'all' ou índice de um qubit")
    parser.set_defaults(handler=handle, input_arg="program")
