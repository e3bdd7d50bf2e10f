import argparse

from src.commands.arguments import positive_int
from src.factories.controller_factory import make_qft_controller
from src.models.circuit import QFTCompileResponse, ReorderMode
from src.models.run_config import RunConfig, Subcommand

EMIT_JSON = "json"
EMIT_TEXT = "text"


def handle(args: argparse.Namespace, config: RunConfig) -> QFTCompileResponse | str:
    """Compila a QFT em m qubits; com --emit text, uma porta por linha."""
    reorder = ReorderMode(args.reorder) if args.reorder else None
    controller = make_qft_controller()
    if args.emit == EMIT_TEXT:
        return controller.render_text(args.m, reorder)
    return controller.compile(args.m, reorder)


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        Subcommand.QFT_COMPILE.value, parents=parents, help="compila a QFT de Z_(2^m) em portas H e CPHASE"
    )
    parser.add_argument("--m", type=positive_int, required=True, help="número de qubits")
    parser.add_argument("--reorder", choices=[r.value for r in ReorderMode], default=None)
    parser.add_argument("--emit", choices=[EMIT_JSON, EMIT_TEXT], default=EMIT_JSON)
    parser.set_defaults(handler=handle, input_arg=None)
