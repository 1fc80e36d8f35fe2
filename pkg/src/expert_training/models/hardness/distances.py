import numpy as np
from scipy.spatial.distance import cdist

from expert_training.errors import DimensionMismatchError, HardnessInputError
from expert_training.models.hardness.class_feature_set import ClassFeatureSet


def _check_dims(a: ClassFeatureSet, b: ClassFeatureSet) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"classes {a.class_id!r} and {b.class_id!r} have feature dims "
            f"{a.dim} and {b.dim}"
        )


def dist_pairwise(a: ClassFeatureSet, b: ClassFeatureSet) -> float:
    """Root of the mean squared Euclidean distance over all cross-class pairs."""
    _check_dims(a, b)
    squared = cdist(a.features, b.features, metric="sqeuclidean")
    return float(np.sqrt(squared.mean()))


def dist_hausdorff(a: ClassFeatureSet, b: ClassFeatureSet) -> float:
    _check_dims(a, b)
    distances = cdist(a.features, b.features)
    a_to_b = distances.min(axis=1).max()
    b_to_a = distances.min(axis=0).max()
    return float(max(a_to_b, b_to_a))


def centering_matrix(q: int) -> np.ndarray:
    return np.eye(q) - np.full((q, q), 1.0 / q)


def hsic(a: ClassFeatureSet, b: ClassFeatureSet) -> float:
    """tr(K_a H K_b H) with linear kernels K = G G^T; no 1/(Q-1)^2 scaling."""
    if a.size != b.size:
        raise HardnessInputError(
            f"HSIC needs equal sample counts, got {a.size} for {a.class_id!r} "
            f"and {b.size} for {b.class_id!r}"
        )
    h = centering_matrix(a.size)
    k_a = a.features @ a.features.T
    k_b = b.features @ b.features.T
    # PSD in exact arithmetic; clip rounding noise below zero
    return max(float(np.trace(k_a @ h @ k_b @ h)), 0.0)
