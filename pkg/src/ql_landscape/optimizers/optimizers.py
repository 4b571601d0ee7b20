"""
Parameter update rules.  Every optimizer maps (parameters, gradients) to new parameter arrays without touching its
inputs; moment estimates live on the optimizer, keyed by parameter group.
"""
from typing import Dict, Union

import numpy as np

from .train_config import ADAM, GD, SGD, TrainConfig, group_rate

Parameters = Dict[str, np.ndarray]


def gd_step(model, grad: Parameters, rates: Union[float, Dict[str, float]]):
    """theta <- theta - eta_group * dtheta for every parameter group of the model."""
    parameters = model.parameters()
    updated = {}
    for (name, value) in parameters.items():
        updated[name] = value - group_rate(rates, name) * grad[name] if name in grad else value
    return model.with_parameters(updated)


class GradientDescent:
    """Plain steps; SGD uses the same rule on mini-batch gradients."""

    def __init__(self, config: TrainConfig):
        self.config = config

    def update(self, parameters: Parameters, gradients: Parameters) -> Parameters:
        return {
            name: value - self.config.rate(name) * gradients[name] if name in gradients else value
            for (name, value) in parameters.items()
        }


class Adam:
    def __init__(self, config: TrainConfig):
        self.config = config
        self.m: Parameters = {}
        self.v: Parameters = {}
        self.t = 0

    def update(self, parameters: Parameters, gradients: Parameters) -> Parameters:
        self.t += 1
        beta1 = self.config.beta1
        beta2 = self.config.beta2
        bias_correction1 = 1.0 - beta1 ** self.t
        bias_correction2 = 1.0 - beta2 ** self.t

        updated = {}
        for (name, value) in parameters.items():
            if name not in gradients:
                updated[name] = value
                continue
            g = gradients[name]
            if name not in self.m:
                self.m[name] = np.zeros_like(value)
                self.v[name] = np.zeros_like(value)
            self.m[name] = beta1 * self.m[name] + (1.0 - beta1) * g
            self.v[name] = beta2 * self.v[name] + (1.0 - beta2) * (g * g)
            denominator = np.sqrt(self.v[name] / bias_correction2) + self.config.epsilon
            updated[name] = value - (self.config.rate(name) / bias_correction1) * self.m[name] / denominator
        return updated


def build_optimizer(config: TrainConfig):
    if config.optimizer == ADAM:
        return Adam(config)
    if config.optimizer in [GD, SGD]:
        return GradientDescent(config)
    raise ValueError(f"Unknown optimizer '{config.optimizer}'")
