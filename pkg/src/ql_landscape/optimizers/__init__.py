from .optimizers import Adam, GradientDescent, build_optimizer, gd_step
from .scaling import scaled_trajectory_check
from .train import train
from .train_config import ADAM, GD, OPTIMIZERS, SGD, TrainConfig
from .train_trace import TrainTrace

__all__ = [
    "Adam",
    "ADAM",
    "build_optimizer",
    "GD",
    "gd_step",
    "GradientDescent",
    "OPTIMIZERS",
    "scaled_trajectory_check",
    "SGD",
    "train",
    "TrainConfig",
    "TrainTrace",
]
