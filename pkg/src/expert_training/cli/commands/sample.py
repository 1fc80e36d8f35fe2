from expert_training.cli.commands.base import Command, require_file, write_csv
from expert_training.config import RunConfig
from expert_training.models.rng import Stream, derive_task_rng
from expert_training.models.semantic_sampling import sample_classes
from expert_training.models.task_kind import TaskKind
from expert_training.models.taxonomy import load_taxonomy


class SampleCommand(Command):
    name = "sample"
    help = "print semantic easy or hard class draws"
    flags = {
        "taxonomy": "taxonomy",
        "kind": "sample_kind",
        "count": "sample_draws",
        "ways": "ways",
        "seed": "seed",
        "output": "output",
    }

    def execute(self, config: RunConfig) -> None:
        taxonomy = load_taxonomy(require_file(config.taxonomy, "taxonomy"))
        kind = TaskKind(config.sample_kind)

        rows = []
        for draw in range(config.sample_draws):
            rng = derive_task_rng(config.seed, draw, Stream.SAMPLE_DRAW)
            classes = sample_classes(taxonomy, kind, config.ways, rng)
            rows.append(",".join([str(draw), str(kind), *classes]))
        write_csv(config.output, "draw,kind,class_ids", rows)
