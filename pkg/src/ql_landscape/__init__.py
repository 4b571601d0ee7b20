from . import datasets, exceptions, harness, landscape, models, objectives, optimizers, oracle
from .contexts import application, cli
from .di import StandardDependencies

__all__ = [
    "application",
    "cli",
    "datasets",
    "exceptions",
    "harness",
    "landscape",
    "models",
    "objectives",
    "optimizers",
    "oracle",
    "StandardDependencies",
]
