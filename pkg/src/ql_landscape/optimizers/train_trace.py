import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np


@dataclass
class TrainTrace:
    """
    One entry per recorded epoch, the first being the starting point and the last the returned model (unless the run
    diverged, in which case the last entry is the offending one).  `penalties` hold gamma * penalty.
    """

    losses: List[float] = field(default_factory=list)
    grad_norms: List[float] = field(default_factory=list)
    penalties: List[float] = field(default_factory=list)
    model: Any = None
    epochs: int = 0
    converged: bool = False
    diverged: bool = False

    def record(self, loss: float, grad_norm: float, penalty: float) -> None:
        self.losses.append(float(loss))
        self.grad_norms.append(float(grad_norm))
        self.penalties.append(float(penalty))

    @property
    def final_loss(self) -> float:
        return self.losses[-1] if self.losses else float("nan")

    @property
    def objective_values(self) -> np.ndarray:
        return np.array(self.losses) + np.array(self.penalties)

    def to_records(self) -> List[Dict[str, float]]:
        return [
            {"epoch": epoch, "loss": loss, "grad_norm": grad_norm, "penalty": penalty}
            for (epoch, (loss, grad_norm, penalty)) in enumerate(zip(self.losses, self.grad_norms, self.penalties))
        ]

    def save_jsonl(self, path: str) -> None:
        with open(path, "w") as trace_file:
            for record in self.to_records():
                trace_file.write(json.dumps(record) + "\n")
