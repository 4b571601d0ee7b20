from .mnist_report import report_mnist
from .sweep import CSV_COLUMNS, SweepReport, build_tasks, run_sweep
from .sweep_config import EXPERIMENTS, SweepConfig
from .trial import TrialResult, derive_seed, nmse, run_trial

__all__ = [
    "build_tasks",
    "CSV_COLUMNS",
    "derive_seed",
    "EXPERIMENTS",
    "nmse",
    "report_mnist",
    "run_sweep",
    "run_trial",
    "SweepConfig",
    "SweepReport",
    "TrialResult",
]
