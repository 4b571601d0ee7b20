from .subcommand_routing import SubcommandRouting

__all__ = [
    "SubcommandRouting",
]
