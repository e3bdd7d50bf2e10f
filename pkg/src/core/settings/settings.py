from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configurações da aplicação.

    As configurações podem ser definidas via variáveis de ambiente ou arquivo .env.
    Todas as tolerâncias numéricas do projeto ficam centralizadas aqui.
    """

    # Aplicação
    app_name: str = "qfourier"
    app_version: str = "0.1.0"
    app_description: str = "Transformada de Fourier em grupos abelianos finitos, simulador de qubits e busca de período"
    # Quando True, o nível de log vira DEBUG (ver logger.py).
    debug: bool = False

    # Logging (sempre em stderr; stdout fica reservado para o JSON de saída)
    log_level: str = "WARNING"
    log_format_json: bool = False

    # Limites de tamanho
    dense_matrix_cap: int = 4096
    dense_stream_block: int = 256
    max_group_order: int = 2**63 - 1
    subgroup_order_cap: int = 2**20
    max_transform_length: int = 2**24
    max_qubits: int = 24
    joint_simulation_cap: int = 256

    # Política de tolerâncias
    unitarity_tolerance: float = 1e-10
    norm_tolerance: float = 1e-10
    oracle_tolerance: float = 1e-9
    character_tolerance: float = 1e-9
    probability_floor: float = -1e-12

    # Algoritmos
    twiddle_renormalise_every: int = 64
    confirmation_window: int = 10
    default_seed: int = 0x5EED
    default_reorder_mode: str = "relabel"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Retorna as configurações da aplicação.

    Usa cache para garantir que apenas uma instância seja criada (singleton pattern).

    Returns:
        Settings: Instância das configurações (cached).
    """
    return Settings()
