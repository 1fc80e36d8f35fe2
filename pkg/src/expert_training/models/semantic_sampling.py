import numpy as np

from expert_training.errors import (
    InsufficientClassesError,
    InsufficientSuperclassesError,
)
from expert_training.models.ids import ClassId
from expert_training.models.task_kind import TaskKind
from expert_training.models.taxonomy import Taxonomy


def sample_easy_classes(
    taxonomy: Taxonomy, n: int, rng: np.random.Generator
) -> list[ClassId]:
    """One class from each of `n` distinct superclasses."""
    if n > taxonomy.superclass_count:
        raise InsufficientSuperclassesError(
            f"{n}-way easy task needs {n} superclasses, "
            f"taxonomy has {taxonomy.superclass_count}"
        )

    chosen = rng.choice(taxonomy.superclass_count, size=n, replace=False)
    classes: list[ClassId] = []
    for index in chosen:
        members = taxonomy.superclasses[int(index)].classes
        classes.append(members[int(rng.integers(len(members)))])
    return classes


def hard_candidates(
    taxonomy: Taxonomy, n: int, rng: np.random.Generator
) -> list[ClassId]:
    """Classes of the shortest shuffled superclass prefix holding at least `n`."""
    if n > taxonomy.class_count:
        raise InsufficientClassesError(
            f"{n}-way hard task needs {n} classes, "
            f"taxonomy has {taxonomy.class_count}"
        )

    order = rng.permutation(taxonomy.superclass_count)
    candidates = list(taxonomy.superclasses[int(order[0])].classes)
    k = 1
    # small superclasses: extend with the next shuffled superclass
    while len(candidates) < n:
        candidates.extend(taxonomy.superclasses[int(order[k])].classes)
        k += 1
    return candidates


def sample_hard_classes(
    taxonomy: Taxonomy, n: int, rng: np.random.Generator
) -> list[ClassId]:
    candidates = hard_candidates(taxonomy, n, rng)
    picked = rng.choice(len(candidates), size=n, replace=False)
    return [candidates[int(index)] for index in picked]


def sample_classes(
    taxonomy: Taxonomy, kind: TaskKind, n: int, rng: np.random.Generator
) -> list[ClassId]:
    if kind is TaskKind.EASY:
        return sample_easy_classes(taxonomy, n, rng)
    if kind is TaskKind.HARD:
        return sample_hard_classes(taxonomy, n, rng)
    raise ValueError(f"no semantic sampler for task kind {kind!r}")
