"""Synthetic hierarchical feature datasets.

Superclass means are drawn around the origin, class means around their
superclass mean and samples around their class mean, all isotropic Gaussians.
With sigma_sup > sigma_cls, classes sharing a superclass sit closer together
than classes from different superclasses, so semantically hard tasks are also
geometrically hard.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from expert_training.errors import ConfigurationError
from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.ids import ClassId
from expert_training.models.taxonomy import Superclass, Taxonomy


class SynthSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    superclasses: int = Field(default=12, ge=1)
    classes_per_superclass: int = Field(default=5, ge=1)
    samples_per_class: int = Field(default=50, ge=1)
    dim: int = Field(default=16, ge=1)
    sigma_sup: float = Field(default=3.0, ge=0.0)
    sigma_cls: float = Field(default=1.0, ge=0.0)
    sigma_noise: float = Field(default=0.5, ge=0.0)
    seed: int = Field(default=0, ge=0)


def superclass_id(index: int) -> str:
    return f"s{index:03d}"


def class_id(superclass_index: int, class_index: int) -> ClassId:
    return f"{superclass_id(superclass_index)}_c{class_index:03d}"


def generate(spec: SynthSpec) -> tuple[DataDictionary, Taxonomy]:
    rng = np.random.default_rng(spec.seed)
    samples: dict[ClassId, np.ndarray] = {}
    superclasses: list[Superclass] = []

    for s in range(spec.superclasses):
        superclass_mean = rng.normal(0.0, spec.sigma_sup, size=spec.dim)
        members: list[ClassId] = []
        for c in range(spec.classes_per_superclass):
            offset = rng.normal(0.0, spec.sigma_cls, size=spec.dim)
            class_mean = superclass_mean + offset
            noise = rng.normal(
                0.0, spec.sigma_noise, size=(spec.samples_per_class, spec.dim)
            )
            members.append(class_id(s, c))
            samples[members[-1]] = class_mean + noise
        superclasses.append(Superclass(id=superclass_id(s), classes=tuple(members)))

    return DataDictionary(samples), Taxonomy(superclasses=tuple(superclasses))


def split_by_superclass(
    data: DataDictionary, taxonomy: Taxonomy, train_superclasses: int
) -> tuple[tuple[DataDictionary, Taxonomy], tuple[DataDictionary, Taxonomy]]:
    """First `train_superclasses` superclasses train, the rest test."""
    if not 0 < train_superclasses < taxonomy.superclass_count:
        raise ConfigurationError(
            f"train_superclasses must lie in 1..{taxonomy.superclass_count - 1}"
        )

    ids = [superclass.id for superclass in taxonomy.superclasses]
    parts = []
    for chosen in (ids[:train_superclasses], ids[train_superclasses:]):
        part_taxonomy = taxonomy.restricted_to(chosen)
        parts.append((data.subset(part_taxonomy.class_ids), part_taxonomy))
    return parts[0], parts[1]
