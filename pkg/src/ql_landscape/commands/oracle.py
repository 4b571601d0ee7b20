from typing import Any, Dict

from ..harness.sweep_config import SINGLE_SWEEP_K
from ..harness.trial import build_block_data
from ..oracle.closed_form import layer_from_solution
from ..oracle.least_squares import solve_oracle
from ..objectives import objective
from ..objectives.objective_config import ObjectiveConfig
from . import options


def oracle(request_data: Dict[str, Any], di) -> Dict[str, Any]:
    """
    Solves the convex least-squares problem for every block of the configured data.  For quadratic fits the
    closed-form network built from the eigendecomposition is evaluated too; its loss matches the oracle's.
    """
    data = options.load_config_file(request_data.get("config"))
    degree = data.pop("oracle_degree", 2)
    config = options.sweep_config(request_data, experiment=SINGLE_SWEEP_K, data=data)
    blocks = []
    for block in range(config.blocks):
        dataset = build_block_data(config, config.cells[0], block)
        solution = solve_oracle(dataset, degree=degree)
        row = {"block": block, "nmse_star": solution.nmse_star(dataset), **solution.to_dict()}
        if degree == 2:
            layer = layer_from_solution(solution)
            row["closed_form_k"] = layer.k
            row["closed_form_loss"] = objective.loss_mse(layer, dataset)
        blocks.append(row)
    out = options.out_dir(request_data)
    paths = [options.write_json(out, "oracle.json", {"degree": degree, "blocks": blocks})]
    return {
        "degree": degree,
        "blocks": blocks,
        "written": paths,
        "published": options.publish(request_data, di, paths, out),
    }
