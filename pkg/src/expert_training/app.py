from collections.abc import Sequence

from expert_training.cli import Cli
from expert_training.cli.commands.eval import EvalCommand
from expert_training.cli.commands.hardness import HardnessCommand
from expert_training.cli.commands.sample import SampleCommand
from expert_training.cli.commands.sweep import SweepCommand
from expert_training.cli.commands.synth import SynthCommand
from expert_training.cli.commands.train import TrainCommand
from expert_training.utils import get_version


class App:
    def __init__(self):
        self._cli = Cli(
            get_version(),
            [
                SynthCommand(),
                TrainCommand(),
                EvalCommand(),
                HardnessCommand(),
                SampleCommand(),
                SweepCommand(),
            ],
        )

    def run(self, argv: Sequence[str]) -> int:
        return self._cli.run(argv)
