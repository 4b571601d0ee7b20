from .standard_dependencies import StandardDependencies

__all__ = [
    "StandardDependencies",
]
