import numpy as np
import pytest

from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.synth import SynthSpec, generate
from expert_training.models.taxonomy import Superclass, Taxonomy


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def animal_taxonomy() -> Taxonomy:
    """Three superclasses of sizes 3, 2 and 1."""
    return Taxonomy(
        superclasses=(
            Superclass(id="dog", classes=("husky", "beagle", "collie")),
            Superclass(id="bird", classes=("robin", "crow")),
            Superclass(id="fish", classes=("trout",)),
        )
    )


@pytest.fixture
def wide_taxonomy() -> Taxonomy:
    """Six superclasses of five classes each."""
    return Taxonomy(
        superclasses=tuple(
            Superclass(id=f"s{s}", classes=tuple(f"s{s}_c{c}" for c in range(5)))
            for s in range(6)
        )
    )


@pytest.fixture
def small_synth() -> tuple[DataDictionary, Taxonomy]:
    """Six superclasses x four classes x 30 samples in 6 dimensions."""
    spec = SynthSpec(
        superclasses=6, classes_per_superclass=4, samples_per_class=30, dim=6, seed=7
    )
    return generate(spec)


@pytest.fixture
def small_data(small_synth: tuple[DataDictionary, Taxonomy]) -> DataDictionary:
    return small_synth[0]


@pytest.fixture
def small_taxonomy(small_synth: tuple[DataDictionary, Taxonomy]) -> Taxonomy:
    return small_synth[1]


def _central_difference(f, theta: np.ndarray, step: float = 1e-5) -> np.ndarray:
    theta = np.asarray(theta, dtype=np.float64)
    grad = np.zeros_like(theta)
    for index in range(theta.size):
        offset = np.zeros_like(theta)
        offset[index] = step
        grad[index] = (f(theta + offset) - f(theta - offset)) / (2.0 * step)
    return grad


@pytest.fixture
def central_difference():
    """Central finite-difference gradient of a scalar function of a flat vector."""
    return _central_difference


@pytest.fixture
def relative_error():
    def error(actual: np.ndarray, expected: np.ndarray) -> float:
        scale = max(np.linalg.norm(actual), np.linalg.norm(expected), 1e-8)
        return float(np.linalg.norm(np.asarray(actual) - expected) / scale)

    return error
