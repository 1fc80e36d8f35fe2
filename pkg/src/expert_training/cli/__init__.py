import argparse
from collections.abc import Sequence

from loguru import logger

from expert_training.cli.commands.base import Command
from expert_training.errors import ConfigurationError, ExpertTrainingError


class Cli:
    def __init__(self, version: str, commands: Sequence[Command]):
        self._parser = argparse.ArgumentParser(
            prog="expert-training",
            description="Task-hardness-aware meta-learning with expert training",
        )
        self._parser.add_argument("--version", action="version", version=version)
        subparsers = self._parser.add_subparsers(
            dest="command", required=True, metavar="COMMAND"
        )
        for command in commands:
            command.register(subparsers)

    def run(self, argv: Sequence[str]) -> int:
        try:
            args = self._parser.parse_args(list(argv))
        except SystemExit as exit_:
            # argparse already printed usage; 2 for usage errors, 0 for --help
            return int(exit_.code or 0)

        command: Command = args.handler
        try:
            command.execute(command.config_from(args))
        except ConfigurationError as error:
            logger.error(f"{command.name}: {error}")
            return 2
        except (ExpertTrainingError, OSError, ValueError) as error:
            logger.error(f"{command.name} failed: {error}")
            return 1
        return 0
