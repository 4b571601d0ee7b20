import logging
from typing import Any, Dict

import numpy as np

from ..datasets.generators import generate
from ..exceptions import ConfigError
from ..harness.sweep_config import SCALING_CHECK
from ..harness.trial import derive_seed
from ..models.initializers import random_gaussian
from ..optimizers.scaling import scaled_trajectory_check
from . import options

logger = logging.getLogger(__name__)

DEFAULT_SCALING = {
    "betas": [0.5, 2.0],
    "eta_Q": 1e-3,
    "eta_lambda": 1e-3,
    "steps": 100,
    "tolerance": 1e-8,
}


def scaling_check(request_data: Dict[str, Any], di) -> Dict[str, Any]:
    """
    Checks that gradient descent from a rescaled point with compensating learning rates tracks the original run.

    The optional "scaling" section of the configuration file sets betas, eta_Q, eta_lambda, steps and tolerance; the
    rest of the file is an ordinary sweep configuration (d, N, generator, blocks, seed).  Each block is one random
    instance, and cells are the hidden widths tried on it.
    """
    data = options.load_config_file(request_data.get("config"))
    scaling = {**DEFAULT_SCALING, **data.pop("scaling", {})}
    unknown = set(scaling.keys()) - set(DEFAULT_SCALING.keys())
    if unknown:
        raise ConfigError(f"Unknown scaling configuration keys: {', '.join(sorted(unknown))}")
    if any(beta == 0 for beta in scaling["betas"]):
        raise ConfigError("Scaling factors must be nonzero")
    config = options.sweep_config(request_data, experiment=SCALING_CHECK, allowed=[SCALING_CHECK], data=data)

    checks = []
    for block in range(config.blocks):
        seed = derive_seed(config.seed, block)
        dataset = generate(config.generator, config.d, config.N, seed)
        rng = np.random.default_rng(seed)
        for k in config.cells:
            model = random_gaussian(config.d, k, dataset.M, rng, lambda_scale=0.1)
            for beta in scaling["betas"]:
                deviation = scaled_trajectory_check(
                    model, dataset, beta, scaling["eta_Q"], scaling["eta_lambda"], scaling["steps"]
                )
                checks.append({"block": block, "k": k, "beta": beta, "max_relative_deviation": deviation})
                logger.info(f"Scaling check block={block} k={k} beta={beta}: deviation {deviation:.3e}")

    max_deviation = max(check["max_relative_deviation"] for check in checks)
    body = {
        "checks": checks,
        "max_relative_deviation": max_deviation,
        "tolerance": scaling["tolerance"],
        "passed": max_deviation <= scaling["tolerance"],
        "config": {**config.to_dict(), "scaling": scaling},
    }
    out = options.out_dir(request_data)
    paths = [options.write_json(out, "scaling_check.json", body)]
    return {**body, "written": paths, "published": options.publish(request_data, di, paths, out)}
