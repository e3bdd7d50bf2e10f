from collections.abc import Callable
from functools import wraps
from typing import ParamSpec, TypeVar

from pydantic import ValidationError

from src.core.exceptions.application_errors import EXIT_DOMAIN_ERROR, ApplicationServiceError
from src.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
P = ParamSpec("P")


def translate_error(err: Exception, func_name: str, service_name: str, error_code: str) -> ApplicationServiceError:
    """Converte qualquer exceção em ApplicationServiceError, registrando o ocorrido.

    - ApplicationServiceError: devolvida como está (o código original prevalece);
    - ValidationError do pydantic: código VALIDATION_ERROR;
    - ValueError: código padrão do decorator (pré-condição violada);
    - demais exceções: código padrão, registradas como erro inesperado.

    Todas as exceções convertidas saem com código de saída 1.
    """
    if isinstance(err, ApplicationServiceError):
        logger.warning(
            "Service error",
            operation=func_name,
            service=service_name,
            error_code=err.error_code,
            error_message=err.message,
        )
        return err

    expected = isinstance(err, ValueError)
    if isinstance(err, ValidationError):
        code, message = "VALIDATION_ERROR", f"Validation error: {err}"
    elif expected:
        code, message = error_code, f"Validation error in {func_name}: {err}"
    else:
        code, message = error_code, f"Error in {func_name}: {err}"

    log = logger.warning if expected else logger.error
    log(
        "Precondition failed" if expected else "Unexpected error",
        operation=func_name,
        service=service_name,
        error_type=type(err).__name__,
        error_code=code,
        error_message=str(err),
    )
    wrapped = ApplicationServiceError(
        service_name=service_name,
        message=message,
        error_code=code,
        exit_code=EXIT_DOMAIN_ERROR,
    )
    wrapped.__cause__ = err
    return wrapped


def handle_service_errors_sync(
    service_name: str,
    error_code: str = "SERVICE_ERROR",
) -> Callable[[Callable[P, T]], Callable[P, T]]:
    """Decorator dos métodos públicos dos services: toda falha sai como ApplicationServiceError.

    Args:
        service_name: Nome do serviço nas mensagens e nos logs.
        error_code: Código usado quando a exceção não traz um próprio.

    Exemplo:
        @handle_service_errors_sync(service_name="GroupService", error_code="INVALID_GROUP")
        def make_group(self, moduli: Sequence[int]) -> AbelianGroup:
            ...
    """

    def decorator(func: Callable[P, T]) -> Callable[P, T]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
            try:
                return func(*args, **kwargs)
            except Exception as err:
                translated = translate_error(err, func.__name__, service_name, error_code)
                if translated is err:
                    raise
                raise translated from err

        return wrapper

    return decorator
