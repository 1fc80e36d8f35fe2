import os
import sys
from importlib.metadata import version

from loguru import logger


def get_version() -> str:
    try:
        return version("expert-training")
    except Exception:
        return "undefined"


def log_banner():
    logger.info(rf"""
Expert Training {get_version()}
===============
""")


def get_log_level() -> str:
    return os.getenv("LOG_LEVEL", "info")


def get_thread_count() -> int:
    value = os.getenv("EXPERT_TRAINING_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        logger.warning(f"ignoring EXPERT_TRAINING_THREADS={value!r}, using 1")
        return 1


def configure_logging() -> None:
    logger.remove()
    logger.add(sys.stderr, level=get_log_level().upper())
