from loguru import logger

from expert_training.cli.commands._flags import EPISODE_FLAGS, TRAINING_FLAGS
from expert_training.cli.commands.base import (
    Command,
    require_file,
    thread_count,
    write_csv,
)
from expert_training.cli.commands.train import load_training_inputs
from expert_training.config import RunConfig
from expert_training.models.data_dictionary import load_dataset
from expert_training.models.taxonomy import Taxonomy, load_taxonomy
from expert_training.models.training.evaluation import EVAL_HEADER, eval_row, evaluate
from expert_training.models.training.trainer import train


class SweepCommand(Command):
    """Trains one learner per phase split and evaluates each on the test split."""

    name = "sweep"
    help = "train and evaluate across several phase splits"
    flags = {
        "dataset": "dataset",
        "taxonomy": "taxonomy",
        "test-dataset": "test_dataset",
        "test-taxonomy": "test_taxonomy",
        "lambdas": "phase_splits",
        **{flag: key for flag, key in TRAINING_FLAGS.items() if key != "phase_split"},
        **EPISODE_FLAGS,
        "mode": "test_mode",
        "eval-tasks": "eval_tasks",
        "output": "output",
    }

    def execute(self, config: RunConfig) -> None:
        data, taxonomy = load_training_inputs(config)
        test_data = load_dataset(require_file(config.test_dataset, "test_dataset"))
        test_taxonomy: Taxonomy | None = None
        if config.test_taxonomy is not None:
            test_taxonomy = load_taxonomy(
                require_file(config.test_taxonomy, "test_taxonomy")
            )
            test_data.check_taxonomy(test_taxonomy)

        rows = []
        for phase_split in config.phase_splits:
            logger.info(f"phase split {phase_split:.4g}")
            plan = config.to_train_plan(phase_split=phase_split)
            state, _ = train(plan, data, taxonomy, thread_count(config))
            result = evaluate(
                state,
                test_data,
                test_taxonomy,
                config.eval_tasks,
                config.ways,
                config.shots,
                config.queries,
                config.test_mode,
                config.seed,
            )
            rows.append(f"{phase_split!r},{eval_row(result)}")
        write_csv(config.output, "phase_split," + EVAL_HEADER, rows)
