from expert_training.cli.commands._flags import EPISODE_FLAGS
from expert_training.cli.commands.base import Command, require_file, write_csv
from expert_training.config import RunConfig
from expert_training.models.data_dictionary import DataDictionary, load_dataset
from expert_training.models.episode import LabeledBatch, random_episode
from expert_training.models.hardness.class_feature_set import ClassFeatureSet
from expert_training.models.hardness.report import task_hardness
from expert_training.models.learner.mlp import extract_features, inner_update
from expert_training.models.rng import Stream, derive_task_rng
from expert_training.models.training.checkpoint import load_checkpoint
from expert_training.models.training.state import LearnerState


class HardnessCommand(Command):
    """Scores random tasks of a dataset.

    With a checkpoint the query features are the learner's last hidden layer
    after one inner step on the support set; without one they are the raw
    dataset features.
    """

    name = "hardness"
    help = "print the hardness score of random tasks"
    flags = {
        "dataset": "dataset",
        "measure": "measure",
        "tasks": "hardness_tasks",
        "checkpoint": "checkpoint",
        **EPISODE_FLAGS,
        "output": "output",
    }

    def execute(self, config: RunConfig) -> None:
        data = load_dataset(require_file(config.dataset, "dataset"))
        state: LearnerState | None = None
        # only an explicitly configured checkpoint switches to learner features
        if "checkpoint" in config.model_fields_set:
            state = load_checkpoint(require_file(config.checkpoint, "checkpoint"))

        rows = []
        for task_index in range(config.hardness_tasks):
            score = self._score(config, data, state, task_index)
            rows.append(f"{task_index},{config.measure},{score!r}")
        write_csv(config.output, "task_index,measure,TH", rows)

    @staticmethod
    def _score(
        config: RunConfig,
        data: DataDictionary,
        state: LearnerState | None,
        task_index: int,
    ) -> float:
        rng = derive_task_rng(config.seed, task_index, Stream.HARDNESS_TASK)
        episode = random_episode(
            data, config.ways, config.shots, config.queries, rng, task_index
        )
        query = episode.query
        if state is not None:
            adapted = inner_update(state.params, state.rates, episode.support)
            features = extract_features(adapted, query.features)
            query = LabeledBatch(features, query.labels)

        sets = [
            ClassFeatureSet(class_id, rows)
            for class_id, rows in zip(episode.class_ids, query.by_label(episode.ways))
        ]
        return task_hardness(sets, config.measure).score
