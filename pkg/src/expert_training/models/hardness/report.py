import numpy as np
from pydantic import BaseModel, ConfigDict

from expert_training.errors import HardnessInputError
from expert_training.models.hardness.class_feature_set import ClassFeatureSet
from expert_training.models.hardness.measure import Measure

EPSILON = 1e-12


class HardnessReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    measure: Measure
    # symmetric (N, N); the diagonal is unused and left at zero
    relations: np.ndarray
    # the pair that decided the score (closest for distances, most dependent
    # for HSIC), lowest pair index on ties
    deciding_pair: tuple[int, int]
    score: float


def task_hardness(sets: list[ClassFeatureSet], measure: Measure) -> HardnessReport:
    n = len(sets)
    if n < 2:
        raise HardnessInputError(f"task hardness needs >= 2 classes, got {n}")

    relation = measure.relation
    relations = np.zeros((n, n), dtype=np.float64)
    best: float | None = None
    deciding_pair = (0, 1)
    for i in range(n):
        for j in range(i + 1, n):
            value = relation(sets[i], sets[j])
            relations[i, j] = relations[j, i] = value
            better = (
                best is None
                or (measure.is_distance and value < best)
                or (not measure.is_distance and value > best)
            )
            if better:
                best = value
                deciding_pair = (i, j)

    assert best is not None
    if measure.is_distance:
        score = 1.0 / max(best, EPSILON)
    else:
        score = max(best, EPSILON)

    relations.setflags(write=False)
    return HardnessReport(
        measure=measure,
        relations=relations,
        deciding_pair=deciding_pair,
        score=score,
    )
