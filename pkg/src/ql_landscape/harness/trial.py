from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..datasets.dataset import Dataset
from ..datasets.generators import generate
from ..landscape.classify import classify_point
from ..landscape.example1 import example1_point, make_example1
from ..models.basis import two_layer_widths
from ..models.initializers import initialize_deep, initialize_poly, initialize_single, perturb
from ..models.ql_layer import QLLayer
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig, for_variant
from ..optimizers.train import train
from ..optimizers.train_trace import TrainTrace
from ..oracle.least_squares import OracleSolution, solve_oracle
from .sweep_config import DEEP_SWEEP_H1, EXAMPLE1, MNIST, POLY, SINGLE_SWEEP_K, SweepConfig

logger = logging.getLogger(__name__)

EXAMPLE1_PERTURBATION = 1e-6


def derive_seed(*keys: int) -> int:
    """A 32-bit seed determined by the keys alone, so trial order and worker count never change results."""
    return int(np.random.SeedSequence([int(key) for key in keys]).generate_state(1)[0])


def nmse(model, data: Dataset) -> float:
    """sum r^2 / sum y^2"""
    energy = data.target_energy()
    if energy == 0:
        raise ValueError("NMSE is undefined when every target is zero")
    R = objective.residuals(model, data)
    return float(np.sum(R * R) / energy)


@dataclass
class TrialResult:
    experiment: str
    variant: str
    cell: int
    block: int
    seed: int
    nmse: float
    nmse_star: float
    grad_norm: float
    achieved_global: bool
    diverged: bool
    epochs: int
    classification: Optional[str] = None
    error: Optional[str] = None
    model: Any = None
    trace: Optional[TrainTrace] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "variant": self.variant,
            "cell": self.cell,
            "block": self.block,
            "seed": self.seed,
            "nmse": self.nmse,
            "nmse_star": self.nmse_star,
            "grad_norm": self.grad_norm,
            "achieved_global": self.achieved_global,
            "diverged": self.diverged,
            "epochs": self.epochs,
            "classification": self.classification,
            "error": self.error,
        }


def oracle_degree(config: SweepConfig) -> int:
    if config.experiment in [DEEP_SWEEP_H1, MNIST]:
        return 4
    if config.experiment == POLY:
        return config.degree
    return 2


def build_block_data(config: SweepConfig, cell: int, block: int) -> Dataset:
    block_seed = derive_seed(config.seed, block)
    if config.experiment == EXAMPLE1:
        return make_example1(cell, config.N, block_seed)[0]
    return generate(
        config.generator,
        config.d,
        config.N,
        block_seed,
        h1=config.effective_planted_h1,
        raw_tensor=config.raw_tensor,
    )


def build_model(config: SweepConfig, cell: int, data: Dataset, rng: np.random.Generator):
    train_config = config.train
    scales = {"q_scale": train_config.q_scale, "lambda_scale": train_config.lambda_scale}
    if config.experiment in [DEEP_SWEEP_H1, MNIST]:
        (widths, hidden_widths) = two_layer_widths(data.d, cell)
        return initialize_deep(train_config.init, widths, hidden_widths, rng, **scales)
    if config.experiment == POLY:
        return initialize_poly(train_config.init, data.d, cell, config.degree, rng, **scales)
    if config.experiment == EXAMPLE1:
        point = example1_point(data.d)
        return point.with_parameters(perturb(point.parameters(), EXAMPLE1_PERTURBATION, rng, keys=["Q", "lambda"]))
    return initialize_single(train_config.init, data.d, cell, data.M, rng, **scales)


def run_trial(
    config: SweepConfig,
    seed: int,
    cell: int,
    block: int = 0,
    data: Optional[Dataset] = None,
    oracle_solution: Optional[OracleSolution] = None,
) -> TrialResult:
    """
    Builds the block's data (unless given), trains one seeded model and scores it against the oracle.  Failures are
    logged and recorded on the result instead of raised, so one bad trial never takes down a sweep.
    """
    data = build_block_data(config, cell, block) if data is None else data
    if oracle_solution is None:
        oracle_solution = solve_oracle(data, degree=oracle_degree(config))
    nmse_star = oracle_solution.nmse_star(data)
    result = TrialResult(
        experiment=config.experiment,
        variant=config.variant,
        cell=cell,
        block=block,
        seed=seed,
        nmse=float("nan"),
        nmse_star=nmse_star,
        grad_norm=float("nan"),
        achieved_global=False,
        diverged=False,
        epochs=0,
    )
    try:
        model = build_model(config, cell, data, np.random.default_rng(seed))
        objective_config = for_variant(config.variant, data, config.penalty_mode, config.gamma)
        train_config = dataclasses.replace(config.train, seed=seed)
        trace = train(model, data, objective_config, train_config)
        result.model = trace.model
        result.trace = trace
        result.diverged = trace.diverged
        result.epochs = trace.epochs
        result.grad_norm = trace.grad_norms[-1]
        if not trace.diverged:
            result.nmse = nmse(trace.model, data)
            result.achieved_global = abs(result.nmse - nmse_star) <= config.global_tolerance
        if config.classify and isinstance(trace.model, QLLayer) and not trace.diverged:
            result.classification = _classify(trace.model, data, objective_config, config.experiment, oracle_solution)
    except Exception as e:
        logger.exception(f"Trial cell={cell} block={block} seed={seed} failed")
        result.error = str(e)
    return result


def _classify(
    layer: QLLayer,
    data: Dataset,
    objective_config: ObjectiveConfig,
    experiment: str,
    oracle_solution: OracleSolution,
) -> Optional[str]:
    if experiment not in [SINGLE_SWEEP_K, EXAMPLE1]:
        return None
    return classify_point(layer, data, oracle_solution=oracle_solution, config=objective_config).tag
