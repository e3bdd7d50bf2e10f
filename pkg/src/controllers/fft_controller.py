from src.models.fft import FFTMethod, FFTResponse
from src.models.run_config import RunConfig
from src.models.vector import ComplexVector
from src.repositories.interfaces.payload_repository import IPayloadRepository
from src.services.fft_service import FFTService
from src.services.group_service import GroupService


class FFTController:
    def __init__(
        self, group_service: GroupService, fft_service: FFTService, payload_repository: IPayloadRepository
    ) -> None:
        """Inicializa o controller do subcomando `fft`.

        Args:
            group_service: Serviço de grupos (leitura da especificação).
            fft_service: Serviço das transformadas.
            payload_repository: Origem do vetor de entrada.
        """
        self.group_service = group_service
        self.fft_service = fft_service
        self.payload_repository = payload_repository

    def run(self, config: RunConfig, group_spec: str, method: FFTMethod, emit_counts: bool = False) -> FFTResponse:
        """Transforma o vetor de `config.input_path` no grupo dado.

        Args:
            config: Configuração da execução (input_path obrigatório).
            group_spec: Especificação do grupo, ex. Z8 ou Z2xZ3.
            method: dense, tower, radix2 ou walsh.
            emit_counts: Inclui as contagens de operações na resposta.

        Returns:
            FFTResponse: Espectro e, opcionalmente, contagens.
        """
        group = self.group_service.parse_group_spec(group_spec)
        vector = self.payload_repository.read_vector(config.input_path)
        spectrum, counts = self.fft_service.transform(group, vector.to_array(), method)
        return FFTResponse(
            group=self.group_service.format_group_spec(group),
            method=method,
            spectrum=ComplexVector.from_array(spectrum).amps,
            counts=counts if emit_counts else None,
        )
