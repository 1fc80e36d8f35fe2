from loguru import logger

from expert_training.cli.commands.base import Command
from expert_training.config import RunConfig
from expert_training.errors import ConfigurationError
from expert_training.models.data_dictionary import write_dataset
from expert_training.models.synth import generate, split_by_superclass
from expert_training.models.taxonomy import format_taxonomy


class SynthCommand(Command):
    """Writes a superclass-disjoint train/test pair of synthetic datasets."""

    name = "synth"
    help = "generate a synthetic hierarchical dataset"
    flags = {
        "output": "output",
        "seed": "seed",
        "superclasses": "superclasses",
        "classes-per-superclass": "classes_per_superclass",
        "samples-per-class": "samples_per_class",
        "dim": "dim",
        "sigma-sup": "sigma_sup",
        "sigma-cls": "sigma_cls",
        "sigma-noise": "sigma_noise",
        "train-superclasses": "train_superclasses",
    }

    def execute(self, config: RunConfig) -> None:
        if config.output is None:
            raise ConfigurationError("synth needs an output directory")

        data, taxonomy = generate(config.to_synth_spec())
        train, test = split_by_superclass(data, taxonomy, config.train_superclasses)

        config.output.mkdir(parents=True, exist_ok=True)
        for prefix, (part_data, part_taxonomy) in (("train", train), ("test", test)):
            write_dataset(config.output / f"{prefix}.csv", part_data)
            (config.output / f"{prefix}_taxonomy.tsv").write_text(
                format_taxonomy(part_taxonomy), encoding="utf-8"
            )
            logger.info(
                f"{prefix}: {part_taxonomy.superclass_count} superclasses, "
                f"{part_data.class_count} classes"
            )
        logger.info(f"wrote synthetic datasets to {config.output}")
