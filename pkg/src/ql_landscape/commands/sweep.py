from typing import Any, Dict

from ..harness.sweep import run_sweep
from ..harness.sweep_config import DEEP_SWEEP_H1, EXAMPLE1, POLY, SINGLE_SWEEP_K
from . import options


def sweep(request_data: Dict[str, Any], worker_count: int, di) -> Dict[str, Any]:
    """Width sweep for single-layer, deep, polynomial or spurious-minimum (example1) models, depending on the configured experiment."""
    config = options.sweep_config(
        request_data,
        experiment=SINGLE_SWEEP_K,
        allowed=[SINGLE_SWEEP_K, DEEP_SWEEP_H1, POLY, EXAMPLE1],
    )
    out = options.out_dir(request_data)
    report = run_sweep(config, workers=options.workers(request_data, worker_count))
    paths = report.write(out)
    published = options.publish(request_data, di, paths, out)
    options.check_diverged(request_data, report.diverged_cells)
    return {**report.summary(), "written": paths, "published": published}
