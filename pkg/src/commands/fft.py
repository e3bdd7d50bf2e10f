import argparse
from pathlib import Path

from src.factories.controller_factory import make_fft_controller
from src.models.fft import FFTMethod, FFTResponse
from src.models.run_config import RunConfig, Subcommand


def handle(args: argparse.Namespace, config: RunConfig) -> FFTResponse:
    """Transforma um vetor JSON no grupo dado."""
    return make_fft_controller().run(config, args.group, FFTMethod(args.method), emit_counts=args.emit_counts)


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.FFT.value, parents=parents, help="transformada de Fourier de um vetor em um grupo abeliano"
    )
    parser.add_argument("--group", required=True, help="grupo, ex. Z8, Z2xZ3, Z2^3")
    parser.add_argument("--input", type=Path, required=True, help="vetor JSON: lista de pares [re, im]")
    parser.add_argument("--method", choices=[m.value for m in FFTMethod], default=FFTMethod.TOWER.value)
    parser.add_argument("--emit-counts", action="store_true", help="inclui as contagens de operações")
    parser.set_defaults(handler=handle, input_arg="input")
