from src.core.middleware.command_logging import command_logging

__all__ = ["command_logging"]
