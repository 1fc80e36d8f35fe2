import numpy as np
from numpy.typing import NDArray

from expert_training.errors import InsufficientClassesError, InsufficientSamplesError
from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.ids import ClassId
from expert_training.models.semantic_sampling import sample_classes
from expert_training.models.task_kind import TaskKind
from expert_training.models.taxonomy import Taxonomy


class LabeledBatch:
    def __init__(self, features: NDArray[np.float64], labels: NDArray[np.int64]):
        if features.ndim != 2 or labels.ndim != 1:
            raise ValueError("features must be (n, d) and labels (n,)")
        if features.shape[0] != labels.shape[0]:
            raise ValueError(
                f"{features.shape[0]} feature rows but {labels.shape[0]} labels"
            )
        self.features = features
        self.labels = labels

    def __len__(self) -> int:
        return self.labels.shape[0]

    def by_label(self, n: int) -> list[NDArray[np.float64]]:
        return [self.features[self.labels == label] for label in range(n)]


class Episode:
    """One N-way K-shot Q-query task.

    Local label `i` stands for `class_ids[i]`; class ids are kept sorted.
    """

    def __init__(
        self,
        class_ids: list[ClassId],
        support: LabeledBatch,
        query: LabeledBatch,
        task_index: int,
        kind: TaskKind = TaskKind.RANDOM,
    ):
        self.class_ids = class_ids
        self.support = support
        self.query = query
        self.task_index = task_index
        self.kind = kind

    @property
    def ways(self) -> int:
        return len(self.class_ids)


def build_episode(
    data: DataDictionary,
    classes: list[ClassId],
    k: int,
    q: int,
    rng: np.random.Generator,
    task_index: int = 0,
    kind: TaskKind = TaskKind.RANDOM,
) -> Episode:
    if len(classes) < 2 or len(set(classes)) != len(classes):
        raise ValueError("an episode needs at least 2 distinct classes")
    if k < 1 or q < 1:
        raise ValueError("an episode needs k >= 1 and q >= 1")

    class_ids = sorted(classes)
    support_rows: list[NDArray[np.float64]] = []
    query_rows: list[NDArray[np.float64]] = []
    for class_id in class_ids:
        available = data.sample_count(class_id)
        if available < k + q:
            raise InsufficientSamplesError(class_id, available, k + q)
        order = rng.permutation(available)
        samples = data.samples(class_id)
        support_rows.append(samples[order[:k]])
        query_rows.append(samples[order[k : k + q]])

    labels = np.arange(len(class_ids), dtype=np.int64)
    return Episode(
        class_ids=class_ids,
        support=LabeledBatch(np.concatenate(support_rows), np.repeat(labels, k)),
        query=LabeledBatch(np.concatenate(query_rows), np.repeat(labels, q)),
        task_index=task_index,
        kind=kind,
    )


def random_episode(
    data: DataDictionary,
    n: int,
    k: int,
    q: int,
    rng: np.random.Generator,
    task_index: int = 0,
) -> Episode:
    if n > data.class_count:
        raise InsufficientClassesError(
            f"{n}-way task needs {n} classes, dataset has {data.class_count}"
        )
    all_ids = data.class_ids
    picked = rng.choice(len(all_ids), size=n, replace=False)
    classes = [all_ids[int(index)] for index in picked]
    return build_episode(data, classes, k, q, rng, task_index, TaskKind.RANDOM)


def semantic_episode(
    data: DataDictionary,
    taxonomy: Taxonomy,
    kind: TaskKind,
    n: int,
    k: int,
    q: int,
    rng: np.random.Generator,
    task_index: int = 0,
) -> Episode:
    classes = sample_classes(taxonomy, kind, n, rng)
    return build_episode(data, classes, k, q, rng, task_index, kind)
