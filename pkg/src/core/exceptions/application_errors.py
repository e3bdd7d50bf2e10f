EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


class ApplicationServiceError(Exception):
    """Erro estruturado de domínio levantado pelos services do qfourier.

    Carrega o nome do serviço, a pré-condição violada (``message``), um código
    estável para testes e scripts (``error_code``) e o código de saída do processo.
    A CLI serializa o erro com ``to_dict`` na última linha do stderr.
    """

    def __init__(
        self,
        service_name: str,
        message: str,
        error_code: str | None = None,
        exit_code: int | None = None,
    ) -> None:
        super().__init__(message)
        self.service_name = service_name
        self.message = message
        self.error_code = error_code or "APPLICATION_ERROR"
        self.exit_code = exit_code or EXIT_DOMAIN_ERROR

    def __str__(self) -> str:
        return f"[{self.service_name} Service] - {self.message}"

    def to_dict(self) -> dict[str, str | int]:
        """Campos do erro no formato JSON emitido pela CLI."""
        return {
            "error": "Application Service Error",
            "service": self.service_name,
            "error_code": self.error_code,
            "message": self.message,
            "exit_code": self.exit_code,
        }
