from enum import StrEnum

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from expert_training.errors import ConfigurationError
from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.episode import Episode, random_episode, semantic_episode
from expert_training.models.learner.mlp import accuracy, inner_update
from expert_training.models.rng import Stream, derive_task_rng
from expert_training.models.task_kind import TaskKind
from expert_training.models.taxonomy import Taxonomy
from expert_training.models.training.state import LearnerState


class TestMode(StrEnum):
    __test__ = False

    RANDOM = "random"
    ALL_EASY = "all_easy"
    ALL_HARD = "all_hard"


class EvalResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: TestMode
    accuracies: tuple[float, ...]

    @property
    def tasks(self) -> int:
        return len(self.accuracies)

    @property
    def mean(self) -> float:
        return float(np.mean(self.accuracies))

    @property
    def std(self) -> float:
        return float(np.std(self.accuracies))

    @property
    def ci95(self) -> float:
        return 1.96 * self.std / float(np.sqrt(self.tasks))


def evaluate(
    state: LearnerState,
    test_data: DataDictionary,
    taxonomy: Taxonomy | None,
    v: int,
    n: int,
    k: int,
    q: int,
    mode: TestMode = TestMode.RANDOM,
    seed: int = 0,
) -> EvalResult:
    """Adapt on each novel task's support set and score its queries.

    Test classes are expected to be disjoint from the training classes; that is
    the caller's responsibility.
    """
    if v < 1:
        raise ConfigurationError("evaluation needs at least one task")
    if mode is not TestMode.RANDOM and taxonomy is None:
        raise ConfigurationError(f"test mode {mode} needs a taxonomy")
    if state.architecture.output_dim != n:
        raise ConfigurationError(
            f"learner has {state.architecture.output_dim} outputs, tasks are {n}-way"
        )
    if state.architecture.input_dim != test_data.dim:
        raise ConfigurationError(
            f"learner expects dim {state.architecture.input_dim}, "
            f"test data has dim {test_data.dim}"
        )

    accuracies = []
    for task_index in range(v):
        rng = derive_task_rng(seed, task_index, Stream.EVAL_TASK)
        episode: Episode
        if mode is TestMode.RANDOM:
            episode = random_episode(test_data, n, k, q, rng, task_index)
        else:
            assert taxonomy is not None
            kind = TaskKind.EASY if mode is TestMode.ALL_EASY else TaskKind.HARD
            episode = semantic_episode(
                test_data, taxonomy, kind, n, k, q, rng, task_index
            )

        adapted = inner_update(state.params, state.rates, episode.support)
        accuracies.append(accuracy(adapted, episode.query))

    result = EvalResult(mode=mode, accuracies=tuple(accuracies))
    logger.info(
        f"evaluated {v} {mode} tasks: {100 * result.mean:.2f}% "
        f"+- {100 * result.ci95:.2f}%"
    )
    return result


EVAL_HEADER = "mode,V,mean_acc,std_acc,ci95"


def eval_row(result: EvalResult) -> str:
    return (
        f"{result.mode},{result.tasks},{result.mean!r},{result.std!r},{result.ci95!r}"
    )
