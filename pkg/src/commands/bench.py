import argparse

from src.commands.arguments import method_list
from src.factories.controller_factory import make_bench_controller
from src.models.fft import BenchResponse, FFTMethod
from src.models.run_config import RunConfig, Subcommand


def handle(args: argparse.Namespace, config: RunConfig) -> BenchResponse:
    """Contagens de operações por método sobre o mesmo vetor aleatório."""
    return make_bench_controller().run(config, args.group, args.methods, timing=args.timing)


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.BENCH.value, parents=parents, help="compara as contagens de operações dos métodos de FFT"
    )
    parser.add_argument("--group", required=True, help="grupo, ex. Z4096")
    parser.add_argument(
        "--methods",
        type=method_list,
        default=[FFTMethod.DENSE, FFTMethod.TOWER],
        help="métodos separados por vírgula (dense,tower,radix2,walsh)",
    )
    parser.add_argument("--timing", action="store_true", help="inclui tempo de parede (não determinístico)")
    parser.set_defaults(handler=handle, input_arg=None)
