import numpy as np
from numpy.typing import NDArray

from expert_training.errors import HardnessInputError
from expert_training.models.ids import ClassId


class ClassFeatureSet:
    """Learner features of one class in a task, one row per sample."""

    def __init__(self, class_id: ClassId, features: NDArray[np.float64]):
        matrix = np.asarray(features, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] < 1:
            raise HardnessInputError(
                f"class {class_id!r} needs a (samples, dim) matrix with >= 1 row"
            )
        if not np.all(np.isfinite(matrix)):
            raise HardnessInputError(f"class {class_id!r} has non-finite features")
        self.class_id = class_id
        self.features = matrix

    @property
    def size(self) -> int:
        return self.features.shape[0]

    @property
    def dim(self) -> int:
        return self.features.shape[1]
