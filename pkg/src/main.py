import argparse
from collections.abc import Sequence

from pydantic import BaseModel

from src.commands import build_parser
from src.commands.arguments import run_config_from_args
from src.core.exceptions import EXIT_OK, EXIT_USAGE_ERROR, ApplicationServiceError
from src.core.exceptions.cli_handlers import application_error_handler
from src.core.middleware import command_logging
from src.factories.service_factory import make_payload_repository
from src.models.run_config import RunConfig


def render(result: BaseModel | str, pretty: bool = False) -> str:
    """Serializa a resposta; campos None são omitidos para manter a saída estável."""
    if isinstance(result, str):
        return result
    return result.model_dump_json(indent=2 if pretty else None, exclude_none=True) + "\n"


def _execute(args: argparse.Namespace, config: RunConfig) -> None:
    with command_logging(config):
        result = args.handler(args, config)
        make_payload_repository().write_output(render(result, config.pretty), config.output_path)


def main(argv: Sequence[str] | None = None) -> int:
    """Ponto de entrada da CLI.

    Args:
        argv: Argumentos sem o nome do programa (padrão: sys.argv[1:]).

    Returns:
        int: 0 em sucesso, 1 em erro de domínio, 2 em erro de uso.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code in (0, None) else EXIT_USAGE_ERROR

    input_arg = args.input_arg
    config = run_config_from_args(args, getattr(args, input_arg) if input_arg else None)
    try:
        _execute(args, config)
    except ApplicationServiceError as err:
        return application_error_handler(err, subcommand=config.subcommand.value)
    return EXIT_OK
