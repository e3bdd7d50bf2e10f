from src.repositories.json_file.json_file_repository import JsonFileRepository

__all__ = [
    "JsonFileRepository",
]
