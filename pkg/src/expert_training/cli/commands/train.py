from loguru import logger

from expert_training.cli.commands._flags import EPISODE_FLAGS, TRAINING_FLAGS
from expert_training.cli.commands.base import Command, require_file, thread_count
from expert_training.config import RunConfig
from expert_training.models.data_dictionary import DataDictionary, load_dataset
from expert_training.models.taxonomy import Taxonomy, load_taxonomy
from expert_training.models.training.checkpoint import save_checkpoint
from expert_training.models.training.meta_step import METRICS_HEADER, metrics_row
from expert_training.models.training.trainer import ExpertTrainer


def load_training_inputs(
    config: RunConfig,
) -> tuple[DataDictionary, Taxonomy | None]:
    data = load_dataset(require_file(config.dataset, "dataset"))
    taxonomy: Taxonomy | None = None
    if config.taxonomy is not None:
        taxonomy = load_taxonomy(require_file(config.taxonomy, "taxonomy"))
    return data, taxonomy


class TrainCommand(Command):
    name = "train"
    help = "meta-train a learner and write metrics and a checkpoint"
    flags = {
        "dataset": "dataset",
        "taxonomy": "taxonomy",
        **TRAINING_FLAGS,
        **EPISODE_FLAGS,
        "checkpoint": "checkpoint",
        "metrics": "metrics",
    }

    def execute(self, config: RunConfig) -> None:
        data, taxonomy = load_training_inputs(config)
        trainer = ExpertTrainer(
            config.to_train_plan(), data, taxonomy, thread_count(config)
        )

        config.metrics.parent.mkdir(parents=True, exist_ok=True)
        with config.metrics.open("w", encoding="utf-8", newline="\n") as metrics:
            metrics.write(METRICS_HEADER + "\n")
            for log in trainer.run():
                metrics.write(metrics_row(log) + "\n")
        logger.info(f"wrote {config.metrics}")

        config.checkpoint.parent.mkdir(parents=True, exist_ok=True)
        save_checkpoint(config.checkpoint, trainer.state)
        logger.info(f"wrote {config.checkpoint}")
