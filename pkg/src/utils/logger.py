import inspect
import logging
import sys
from contextvars import ContextVar
from functools import cache
from typing import Any

import structlog
from structlog.stdlib import LoggerFactory
from structlog.typing import EventDict, Processor, WrappedLogger

from src.core.settings import get_settings

# Identificador da invocação corrente da CLI; anexado a todo evento de log
_run_id_var: ContextVar[str | None] = ContextVar("run_id", default=None)


def get_run_id() -> str | None:
    """Run ID da invocação corrente, ou None fora de um comando."""
    return _run_id_var.get()


def set_run_id(run_id: str | None) -> None:
    _run_id_var.set(run_id)


def _add_run_id(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    run_id = _run_id_var.get()
    if run_id:
        event_dict.setdefault("run_id", run_id)
    return event_dict


@cache
def _configure() -> None:
    """Configura structlog e o logging da stdlib na primeira chamada.

    O stdout é reservado para o JSON de resultado, então todo log vai para o
    stderr. ``DEBUG=true`` força o nível DEBUG; caso contrário vale ``LOG_LEVEL``.
    ``LOG_FORMAT_JSON`` alterna entre JSONRenderer e o renderer de console.
    """
    settings = get_settings()
    renderer: Processor = (
        structlog.processors.JSONRenderer() if settings.log_format_json else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            _add_run_id,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=LoggerFactory(),
        cache_logger_on_first_use=True,
    )

    level = "DEBUG" if settings.debug else settings.log_level.upper()
    logging.basicConfig(
        format="%(message)s",
        level=logging.getLevelNamesMapping().get(level, logging.WARNING),
        stream=sys.stderr,
    )


class SimpleLogger:
    """Fachada mínima sobre o BoundLogger: mensagem em inglês mais campos estruturados."""

    __slots__ = ("_bound",)

    def __init__(self, bound: structlog.stdlib.BoundLogger) -> None:
        self._bound = bound

    def debug(self, message: str, **fields: Any) -> None:
        self._bound.debug(message, **fields)

    def info(self, message: str, **fields: Any) -> None:
        self._bound.info(message, **fields)

    def warning(self, message: str, **fields: Any) -> None:
        self._bound.warning(message, **fields)

    def error(self, message: str, **fields: Any) -> None:
        # Anexa o traceback corrente quando chamado dentro de um except
        self._bound.error(message, exc_info=sys.exc_info()[0] is not None, **fields)


def get_logger(name: str | None = None) -> SimpleLogger:
    """Logger estruturado do módulo chamador.

    Examples:
        logger = get_logger(__name__)
        logger.info("Transform finished", operation="fft_radix2", size=4096, multiplies=49152)
    """
    _configure()
    if name is None:
        caller = inspect.stack()[1].frame
        name = caller.f_globals.get("__name__", "unknown")
    return SimpleLogger(structlog.get_logger(name))
