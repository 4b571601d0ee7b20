from typing import Any, Dict

from ..harness.sweep import run_sweep
from ..harness.sweep_config import POLY
from . import options


def poly(request_data: Dict[str, Any], worker_count: int, di) -> Dict[str, Any]:
    config = options.sweep_config(request_data, experiment=POLY, allowed=[POLY])
    out = options.out_dir(request_data)
    report = run_sweep(config, workers=options.workers(request_data, worker_count))
    paths = report.write(out)
    published = options.publish(request_data, di, paths, out)
    options.check_diverged(request_data, report.diverged_cells)
    return {**report.summary(), "basis_size": config.threshold_marker, "written": paths, "published": published}
