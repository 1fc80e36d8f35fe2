import numpy as np
from numpy.typing import NDArray

from expert_training.models.learner.architecture import LearnerArchitecture

Layer = tuple[NDArray[np.float64], NDArray[np.float64]]


class LearnerParams:
    """Flat parameter vector theta plus the architecture that gives it shape.

    Layout: for each layer, the (fan_in, fan_out) weight matrix in row-major
    order followed by its bias vector.
    """

    def __init__(self, architecture: LearnerArchitecture, theta: NDArray[np.float64]):
        theta = np.asarray(theta, dtype=np.float64)
        if theta.shape != (architecture.parameter_count,):
            raise ValueError(
                f"theta has shape {theta.shape}, architecture needs "
                f"({architecture.parameter_count},)"
            )
        if not np.all(np.isfinite(theta)):
            raise ValueError("theta has non-finite entries")
        theta = theta.copy()
        theta.setflags(write=False)
        self.architecture = architecture
        self.theta = theta

    def layers(self) -> list[Layer]:
        return unflatten(self.architecture, self.theta)

    def with_theta(self, theta: NDArray[np.float64]) -> "LearnerParams":
        return LearnerParams(self.architecture, theta)


def unflatten(
    architecture: LearnerArchitecture, flat: NDArray[np.float64]
) -> list[Layer]:
    layers: list[Layer] = []
    offset = 0
    for fan_in, fan_out in architecture.layer_shapes:
        weight = flat[offset : offset + fan_in * fan_out].reshape(fan_in, fan_out)
        offset += fan_in * fan_out
        bias = flat[offset : offset + fan_out]
        offset += fan_out
        layers.append((weight, bias))
    return layers


def flatten(layers: list[Layer]) -> NDArray[np.float64]:
    return np.concatenate([part.ravel() for layer in layers for part in layer])


def init_params(
    architecture: LearnerArchitecture, rng: np.random.Generator
) -> LearnerParams:
    """Weights uniform in +-1/sqrt(fan_in), biases zero."""
    layers: list[Layer] = []
    for fan_in, fan_out in architecture.layer_shapes:
        bound = 1.0 / np.sqrt(fan_in)
        weight = rng.uniform(-bound, bound, size=(fan_in, fan_out))
        layers.append((weight, np.zeros(fan_out)))
    return LearnerParams(architecture, flatten(layers))


class InnerRates:
    """Inner-loop learning rates: one per parameter (Meta-SGD) or one scalar."""

    def __init__(self, values: float | NDArray[np.float64]):
        array = np.array(values, dtype=np.float64)
        if array.ndim > 1:
            raise ValueError("inner rates must be a scalar or a flat vector")
        if not np.all(np.isfinite(array)) or np.any(array <= 0):
            raise ValueError("inner rates must be finite and > 0")
        array.setflags(write=False)
        self.values = array

    @property
    def per_parameter(self) -> bool:
        return self.values.ndim == 1
