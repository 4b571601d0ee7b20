from .cli import CommandLineContext, application, cli

__all__ = [
    "application",
    "cli",
    "CommandLineContext",
]
