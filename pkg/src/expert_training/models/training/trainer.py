from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor

from loguru import logger

from expert_training.errors import ConfigurationError
from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.episode import Episode
from expert_training.models.taxonomy import Taxonomy
from expert_training.models.training.meta_step import BatchLog, meta_batch_step
from expert_training.models.training.plan import TrainPlan
from expert_training.models.training.schedule import (
    phase_of,
    select_training_episode,
)
from expert_training.models.training.state import LearnerState, initial_state


class ExpertTrainer:
    """Runs the meta-training loop one meta-batch at a time."""

    def __init__(
        self,
        plan: TrainPlan,
        data: DataDictionary,
        taxonomy: Taxonomy | None = None,
        threads: int = 1,
    ):
        if plan.schedule.needs_taxonomy and taxonomy is None:
            raise ConfigurationError(f"schedule {plan.schedule} needs a taxonomy")
        if taxonomy is not None:
            data.check_taxonomy(taxonomy)
        if data.class_count < plan.ways:
            raise ConfigurationError(
                f"{plan.ways}-way training needs {plan.ways} classes, "
                f"dataset has {data.class_count}"
            )
        if threads < 1:
            raise ConfigurationError("threads must be >= 1")

        self._plan = plan
        self._data = data
        self._taxonomy = taxonomy
        self._threads = threads
        self._state = initial_state(plan, data.dim)

    @property
    def state(self) -> LearnerState:
        return self._state

    def run(self) -> Iterator[BatchLog]:
        plan = self._plan
        logger.info(
            f"training {plan.tasks} tasks in {plan.batch_count} batches "
            f"(schedule={plan.schedule}, measure={plan.measure}, "
            f"primary tasks={plan.primary_tasks})"
        )
        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            for batch_index in range(plan.batch_count):
                first = batch_index * plan.batch_size
                indices = range(first, min(first + plan.batch_size, plan.tasks))
                # a batch straddling the boundary takes its first task's phase
                phase = phase_of(first, plan)
                episodes = list(executor.map(self._episode, indices))

                self._state, log = meta_batch_step(
                    self._state, episodes, plan, phase, batch_index, executor
                )
                logger.debug(
                    f"batch {batch_index} ({phase}): "
                    f"loss={log.mean_weighted_loss:.4f} "
                    f"TH={log.mean_hardness:.4g}"
                )
                yield log

    def _episode(self, task_index: int) -> Episode:
        return select_training_episode(
            task_index, self._plan, self._taxonomy, self._data
        )


def train(
    plan: TrainPlan,
    data: DataDictionary,
    taxonomy: Taxonomy | None = None,
    threads: int = 1,
) -> tuple[LearnerState, list[BatchLog]]:
    trainer = ExpertTrainer(plan, data, taxonomy, threads)
    logs = list(trainer.run())
    return trainer.state, logs
