import logging
from typing import Any, Dict, List

import numpy as np

from ..harness.sweep import run_sweep
from ..harness.sweep_config import EXAMPLE1, SweepConfig
from ..harness.trial import derive_seed
from ..landscape.classify import classify_point
from ..landscape.example1 import make_example1, perturbation_probe
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from ..oracle.least_squares import solve_oracle
from . import options

logger = logging.getLogger(__name__)


def construction_evidence(config: SweepConfig) -> List[Dict[str, Any]]:
    """
    For every dimension and block: the gradient norm, loss, oracle loss, smallest perturbation change and
    classification of the plain-objective point (lambda, Q) = (-1, 0).
    """
    plain = ObjectiveConfig()
    evidence = []
    for d in config.cells:
        for block in range(config.blocks):
            seed = derive_seed(config.seed, block)
            (data, point) = make_example1(d, config.N, seed)
            oracle_solution = solve_oracle(data, degree=2)
            evaluation = objective.evaluate(point, data, plain)
            point_class = classify_point(point, data, oracle_solution=oracle_solution, config=plain)
            evidence.append(
                {
                    "d": d,
                    "block": block,
                    "grad_norm": evaluation.grad_norm,
                    "loss": evaluation.mse,
                    "loss_star": oracle_solution.loss_star,
                    "smallest_perturbation_change": perturbation_probe(point, data, seed=seed, config=plain),
                    "tag": point_class.tag,
                }
            )
            logger.info(f"example1 d={d} block={block}: {point_class.tag}, loss {evaluation.mse:.4g}")
    return evidence


def example1(request_data: Dict[str, Any], worker_count: int, di) -> Dict[str, Any]:
    """
    Certifies the spurious local minimum of the plain objective, then trains the configured variant from small
    perturbations of it to show whether the variant escapes.
    """
    config = options.sweep_config(request_data, experiment=EXAMPLE1, allowed=[EXAMPLE1])
    out = options.out_dir(request_data)
    evidence = construction_evidence(config)
    report = run_sweep(config, workers=options.workers(request_data, worker_count))
    paths = report.write(out)
    paths.append(options.write_json(out, "example1.json", {"constructions": evidence}))
    published = options.publish(request_data, di, paths, out)
    options.check_diverged(request_data, report.diverged_cells)
    return {
        "constructions": evidence,
        "all_spurious": bool(np.all([row["loss"] > row["loss_star"] for row in evidence])),
        **report.summary(),
        "written": paths,
        "published": published,
    }
