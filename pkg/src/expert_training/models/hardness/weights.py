from collections.abc import Sequence
from enum import StrEnum

import numpy as np

from expert_training.models.hardness.report import EPSILON


class Phase(StrEnum):
    PRIMARY = "primary"
    ADVANCED = "advanced"

    def swapped(self) -> "Phase":
        return Phase.ADVANCED if self is Phase.PRIMARY else Phase.PRIMARY


def _check_score(th: float) -> None:
    if not np.isfinite(th) or th <= 0:
        raise ValueError(f"hardness scores must be finite and > 0, got {th}")


def phase_transform(th: float, phase: Phase) -> float:
    """Easy tasks weigh more in the primary phase, hard tasks afterwards."""
    _check_score(th)
    th = max(th, EPSILON)
    return 1.0 / th if phase is Phase.PRIMARY else th


def batch_weights(ths: Sequence[float], phase: Phase) -> list[float]:
    if len(ths) == 0:
        raise ValueError("batch_weights needs at least one score")
    transformed = np.array([phase_transform(th, phase) for th in ths])
    return list((transformed / transformed.sum()).tolist())
