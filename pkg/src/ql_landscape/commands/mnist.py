from typing import Any, Dict, Optional

from ..datasets.mnist import load_mnist_task
from ..exceptions import ConfigError
from ..harness.mnist_report import report_mnist
from ..harness.sweep_config import MNIST
from . import options


def mnist(request_data: Dict[str, Any], worker_count: int, mnist_path: Optional[str], di) -> Dict[str, Any]:
    """
    Binary MNIST tasks for every configured digit pair: PCA features, depth-2 networks per h1 and the degree-4
    closed-form regressor for comparison.  The data directory comes from --mnist-path, the config file, or MNIST_PATH.
    """
    config = options.sweep_config(request_data, experiment=MNIST, allowed=[MNIST])
    path = config.mnist_path or mnist_path
    if not path:
        raise ConfigError("Set the MNIST directory with --mnist-path, 'mnist_path' in the config, or MNIST_PATH")
    count = options.workers(request_data, worker_count)
    reports = []
    for digit_pair in config.digit_pairs:
        task = load_mnist_task(
            path,
            digit_pair,
            config.seed,
            train_fraction=config.train_fraction,
            components=config.d - 1,
        )
        reports.append(report_mnist(task, config, workers=count))
    out = options.out_dir(request_data)
    body = {"reports": reports, "config": config.to_dict()}
    paths = [options.write_json(out, "mnist_report.json", body)]
    diverged = sorted({cell["h1"] for report in reports for cell in report["cells"] if cell["diverged"]})
    published = options.publish(request_data, di, paths, out)
    options.check_diverged(request_data, diverged)
    return {**body, "written": paths, "published": published}
