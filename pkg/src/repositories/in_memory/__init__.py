from src.repositories.in_memory.in_memory_payload_repository import InMemoryPayloadRepository

__all__ = [
    "InMemoryPayloadRepository",
]
