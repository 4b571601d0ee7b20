import logging

import numpy as np

from ..datasets.dataset import Dataset
from ..exceptions import ConfigError
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from .optimizers import build_optimizer
from .train_config import SGD, TrainConfig, group_matches
from .train_trace import TrainTrace

logger = logging.getLogger(__name__)


def _check_frozen(model, config: TrainConfig) -> None:
    names = list(model.parameters().keys())
    for group in config.frozen:
        if not any(group_matches(name, group) for name in names):
            raise ConfigError(f"Cannot freeze '{group}': the model has no such parameter group")


def _masked(gradients, config: TrainConfig):
    if not config.frozen:
        return gradients
    return {
        name: np.zeros_like(gradient) if config.is_frozen(name) else gradient
        for (name, gradient) in gradients.items()
    }


def _finite(parameters) -> bool:
    return all(np.all(np.isfinite(value)) for value in parameters.values())


def _batches(N: int, batch_size: int, seed: int, epoch: int):
    order = np.random.default_rng([seed, epoch]).permutation(N)
    return [order[start:start + batch_size] for start in range(0, N, batch_size)]


def train(model, data: Dataset, objective_config: ObjectiveConfig, train_config: TrainConfig) -> TrainTrace:
    """
    Runs the configured optimizer until the full-batch gradient norm drops below the tolerance or the epoch budget is
    spent.  A loss above the divergence threshold (or any non-finite value) ends the run with `diverged` set; it is
    never raised.
    """
    _check_frozen(model, train_config)
    optimizer = build_optimizer(train_config)
    trace = TrainTrace(model=model)
    grad_tol = train_config.effective_grad_tol
    log_every = max(1, train_config.max_epochs // 10)

    with np.errstate(over="ignore", invalid="ignore"):
        for epoch in range(train_config.max_epochs + 1):
            evaluation = objective.evaluate(model, data, objective_config)
            trace.record(evaluation.mse, evaluation.grad_norm, evaluation.penalty)
            trace.model = model
            trace.epochs = epoch
            value = evaluation.value
            if not np.isfinite(value) or value > train_config.divergence_threshold:
                trace.diverged = True
                logger.warning(f"Training diverged at epoch {epoch} with objective {value}")
                break
            if grad_tol and evaluation.grad_norm < grad_tol:
                trace.converged = True
                logger.debug(f"Converged at epoch {epoch}: gradient norm {evaluation.grad_norm:.3e}")
                break
            if epoch == train_config.max_epochs:
                break
            if epoch % log_every == 0:
                logger.debug(f"epoch {epoch}: loss {evaluation.mse:.6e}, gradient norm {evaluation.grad_norm:.3e}")

            if train_config.optimizer == SGD:
                for batch in _batches(data.N, train_config.batch_size, train_config.seed, epoch):
                    gradients = objective.grad(model, data.subset(batch), objective_config)
                    updated = optimizer.update(model.parameters(), _masked(gradients, train_config))
                    if not _finite(updated):
                        break
                    model = model.with_parameters(updated)
            else:
                updated = optimizer.update(model.parameters(), _masked(evaluation.gradients, train_config))
                if _finite(updated):
                    model = model.with_parameters(updated)
            if not _finite(updated):
                trace.diverged = True
                logger.warning(f"Training diverged at epoch {epoch}: parameters became non-finite")
                break
    return trace
