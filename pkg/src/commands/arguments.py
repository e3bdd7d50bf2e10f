"""Tipos de argumento e flags comuns a todos os subcomandos."""

import argparse
from pathlib import Path

from src.models.fft import FFTMethod
from src.models.run_config import RunConfig, Subcommand


def positive_int(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def seed_value(text: str) -> int:
    """Decimal ou com prefixo (0x5EED)."""
    value = _integer(text, base=0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {text}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected a number, got '{text}'") from err
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def measure_target(text: str) -> str:
    """'all' ou o índice (não negativo) de um qubit."""
    if text == "all":
        return text
    if _integer(text) < 0:
        raise argparse.ArgumentTypeError(f"qubit index must be >= 0, got {text}")
    return str(int(text))


def method_list(text: str) -> list[FFTMethod]:
    """Lista separada por vírgulas, ex. dense,radix2."""
    methods = []
    for token in text.split(","):
        try:
            methods.append(FFTMethod(token.strip()))
        except ValueError as err:
            choices = ", ".join(m.value for m in FFTMethod)
            raise argparse.ArgumentTypeError(f"unknown method '{token}' (choose from {choices})") from err
    return methods


def _integer(text: str, base: int = 10) -> int:
    try:
        return int(text, base)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from err


def common_parser() -> argparse.ArgumentParser:
    """Parser pai com --seed, --tolerance, --out e --pretty."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=seed_value, default=None, help="seed do gerador (padrão fixo: 0x5EED)")
    parser.add_argument(
        "--tolerance", type=positive_float, default=None, help="tolerância numérica (padrão: ORACLE_TOLERANCE)"
    )
    parser.add_argument("--out", type=Path, default=None, help="arquivo de saída (padrão: stdout)")
    parser.add_argument("--pretty", action="store_true", help="JSON indentado")
    return parser


def run_config_from_args(args: argparse.Namespace, input_path: Path | None = None) -> RunConfig:
    """Monta o RunConfig da invocação; flags omitidas ficam com os padrões das configurações."""
    fields = {
        "subcommand": Subcommand(args.subcommand),
        "input_path": input_path,
        "output_path": args.out,
        "pretty": args.pretty,
    }
    if args.seed is not None:
        fields["seed"] = args.seed
    if args.tolerance is not None:
        fields["tolerance"] = args.tolerance
    return RunConfig(**fields)
