from .dataset import Dataset
from .generators import (
    DEEP_PLANTED,
    GENERATORS,
    INDEPENDENT,
    PLANTED_DENSE,
    PLANTED_DIAGONAL,
    gen_deep_planted,
    gen_independent,
    gen_planted_dense,
    gen_planted_diagonal,
    generate,
)
from .mnist import MnistTask, build_task, classify_sign, load_mnist_task, read_idx
from . import io

__all__ = [
    "build_task",
    "classify_sign",
    "Dataset",
    "DEEP_PLANTED",
    "gen_deep_planted",
    "gen_independent",
    "gen_planted_dense",
    "gen_planted_diagonal",
    "generate",
    "GENERATORS",
    "INDEPENDENT",
    "io",
    "load_mnist_task",
    "MnistTask",
    "PLANTED_DENSE",
    "PLANTED_DIAGONAL",
    "read_idx",
]
