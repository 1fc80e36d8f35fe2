import argparse
import sys
from collections.abc import Iterable
from pathlib import Path
from typing import ClassVar

from loguru import logger

from expert_training.config import RunConfig, load_run_config
from expert_training.errors import ConfigurationError
from expert_training.utils import get_thread_count


class Command:
    """One subcommand; `flags` maps each CLI flag to the config key it overrides."""

    name: ClassVar[str]
    help: ClassVar[str]
    flags: ClassVar[dict[str, str]] = {}

    def register(self, subparsers: "argparse._SubParsersAction") -> None:
        parser = subparsers.add_parser(self.name, help=self.help)
        parser.add_argument("--config", help="key = value configuration file")
        for flag, key in self.flags.items():
            parser.add_argument(
                f"--{flag}", dest=key, default=None, help=f"overrides '{key}'"
            )
        parser.set_defaults(handler=self)

    def config_from(self, args: argparse.Namespace) -> RunConfig:
        overrides = {key: getattr(args, key) for key in self.flags.values()}
        return load_run_config(args.config, overrides)

    def execute(self, config: RunConfig) -> None:
        raise NotImplementedError


def require_file(path: Path | None, key: str) -> Path:
    if path is None:
        raise ConfigurationError(f"'{key}' is required")
    if not path.is_file():
        raise ConfigurationError(f"{key} {path} does not exist")
    return path


def thread_count(config: RunConfig) -> int:
    return config.threads if config.threads is not None else get_thread_count()


def write_csv(path: Path | None, header: str, rows: Iterable[str]) -> None:
    """Write header and rows to `path`, or to stdout when no path is set."""
    text = "\n".join([header, *rows]) + "\n"
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"wrote {path}")
