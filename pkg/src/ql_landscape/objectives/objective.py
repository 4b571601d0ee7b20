from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import EmptyDatasetError
from ..models.deep_ql_net import DeepQLNet
from ..models.poly_layer import PolyLayer
from ..models.ql_layer import QLLayer
from . import deep, poly, single_layer
from .objective_config import ObjectiveConfig


@dataclass(frozen=True, eq=False)
class Evaluation:
    mse: float
    penalty: float
    gradients: Dict[str, np.ndarray]

    @property
    def value(self) -> float:
        return self.mse + self.penalty

    @property
    def grad_norm(self) -> float:
        return float(np.sqrt(sum(np.sum(gradient * gradient) for gradient in self.gradients.values())))


def _module_for(model):
    if isinstance(model, QLLayer):
        return single_layer
    if isinstance(model, DeepQLNet):
        return deep
    if isinstance(model, PolyLayer):
        return poly
    raise TypeError(f"There's no objective for a {model.__class__.__name__}")


def _check_data(data: Dataset) -> None:
    if data is None or data.N < 1:
        raise EmptyDatasetError("The loss of an empty dataset is undefined")


def loss_mse(model, data: Dataset) -> float:
    """(1/N) sum r_n^2 for scalar outputs, (1/(MN)) sum r_mn^2 for M outputs."""
    _check_data(data)
    return _module_for(model).loss(model, data)


def residuals(model, data: Dataset) -> np.ndarray:
    _check_data(data)
    return _module_for(model).residuals(model, data)


def evaluate(model, data: Dataset, config: ObjectiveConfig) -> Evaluation:
    _check_data(data)
    (mse, penalty_value, gradients) = _module_for(model).evaluate(model, data, config)
    return Evaluation(mse=mse, penalty=penalty_value, gradients=gradients)


def grad(model, data: Dataset, config: ObjectiveConfig) -> Dict[str, np.ndarray]:
    return evaluate(model, data, config).gradients


def penalty(model, config: ObjectiveConfig) -> float:
    """The raw penalty term for the configured mode, without gamma."""
    return _module_for(model).penalty(model, config)


def objective_value(model, data: Dataset, config: ObjectiveConfig) -> float:
    value = loss_mse(model, data)
    if config.gamma:
        value += config.gamma * penalty(model, config)
    return value
