from src.core.exceptions.application_errors import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    ApplicationServiceError,
)
from src.core.exceptions.error_decorators import handle_service_errors_sync

__all__ = [
    # Exceções
    "ApplicationServiceError",
    # Decorators
    "handle_service_errors_sync",
    # Códigos de saída da CLI
    "EXIT_OK",
    "EXIT_DOMAIN_ERROR",
    "EXIT_USAGE_ERROR",
]
