import argparse

from src.commands import bench, fft, period_find, qft_compile, simon, simulate
from src.commands.arguments import common_parser
from src.core.settings import get_settings


def build_parser() -> argparse.ArgumentParser:
    """Parser da CLI com um subparser por subcomando."""
    settings = get_settings()
    parser = argparse.ArgumentParser(prog=settings.app_name, description=settings.app_description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")

    parents = [common_parser()]
    for command in (fft, simulate, qft_compile, period_find, simon, bench):
        command.register(subparsers, parents)
    return parser


__all__ = ["build_parser"]
