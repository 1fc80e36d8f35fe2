from expert_training.cli.commands._flags import EPISODE_FLAGS
from expert_training.cli.commands.base import Command, require_file, write_csv
from expert_training.config import RunConfig
from expert_training.models.data_dictionary import load_dataset
from expert_training.models.taxonomy import Taxonomy, load_taxonomy
from expert_training.models.training.checkpoint import load_checkpoint
from expert_training.models.training.evaluation import EVAL_HEADER, eval_row, evaluate


class EvalCommand(Command):
    name = "eval"
    help = "evaluate a checkpoint on novel test tasks"
    flags = {
        "checkpoint": "checkpoint",
        "dataset": "test_dataset",
        "taxonomy": "test_taxonomy",
        "mode": "test_mode",
        "tasks": "eval_tasks",
        **EPISODE_FLAGS,
        "output": "output",
    }

    def execute(self, config: RunConfig) -> None:
        state = load_checkpoint(require_file(config.checkpoint, "checkpoint"))
        data = load_dataset(require_file(config.test_dataset, "test_dataset"))
        taxonomy: Taxonomy | None = None
        if config.test_taxonomy is not None:
            taxonomy = load_taxonomy(
                require_file(config.test_taxonomy, "test_taxonomy")
            )
            data.check_taxonomy(taxonomy)

        result = evaluate(
            state,
            data,
            taxonomy,
            config.eval_tasks,
            config.ways,
            config.shots,
            config.queries,
            config.test_mode,
            config.seed,
        )
        write_csv(config.output, EVAL_HEADER, [eval_row(result)])
