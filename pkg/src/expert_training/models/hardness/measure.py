from collections.abc import Callable
from enum import StrEnum

from expert_training.models.hardness.class_feature_set import ClassFeatureSet
from expert_training.models.hardness.distances import (
    dist_hausdorff,
    dist_pairwise,
    hsic,
)


class Measure(StrEnum):
    PAIRWISE = "pairwise"
    HAUSDORFF = "hausdorff"
    HSIC = "hsic"

    @property
    def is_distance(self) -> bool:
        return self is not Measure.HSIC

    @property
    def relation(self) -> Callable[[ClassFeatureSet, ClassFeatureSet], float]:
        return _RELATIONS[self]


_RELATIONS: dict[Measure, Callable[[ClassFeatureSet, ClassFeatureSet], float]] = {
    Measure.PAIRWISE: dist_pairwise,
    Measure.HAUSDORFF: dist_hausdorff,
    Measure.HSIC: hsic,
}
