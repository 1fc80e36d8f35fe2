"""Learner checkpoint file.

UTF-8 CSV, one record per line:

    architecture,<input_dim>,<hidden_1>,...,<hidden_h>,<output_dim>
    meta_mode,<maml|meta_sgd>
    beta,<outer rate>
    theta,<v_1>,...,<v_P>
    alpha,<a_1>,...,<a_P>      (a single value in maml mode)

theta follows the flat layer layout of LearnerParams. Floats are written with
repr() so a load reproduces the saved state exactly.
"""

from pathlib import Path

import numpy as np

from expert_training.errors import ConfigurationError
from expert_training.models.learner.architecture import LearnerArchitecture
from expert_training.models.learner.params import InnerRates, LearnerParams
from expert_training.models.training.plan import MetaMode
from expert_training.models.training.state import LearnerState

_KEYS = ("architecture", "meta_mode", "beta", "theta", "alpha")


def _floats(values: np.ndarray) -> str:
    return ",".join(repr(float(v)) for v in np.atleast_1d(values))


def format_checkpoint(state: LearnerState) -> str:
    architecture = state.architecture
    lines = [
        "architecture," + ",".join(str(width) for width in architecture.widths),
        f"meta_mode,{state.meta_mode}",
        f"beta,{state.beta!r}",
        "theta," + _floats(state.params.theta),
        "alpha," + _floats(state.rates.values),
    ]
    return "\n".join(lines) + "\n"


def parse_checkpoint(text: str) -> LearnerState:
    records: dict[str, list[str]] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key, *values = line.strip().split(",")
        records[key] = values

    missing = [key for key in _KEYS if key not in records]
    if missing:
        raise ConfigurationError(f"checkpoint is missing {', '.join(missing)}")

    try:
        widths = [int(width) for width in records["architecture"]]
        architecture = LearnerArchitecture(
            input_dim=widths[0], hidden=tuple(widths[1:-1]), output_dim=widths[-1]
        )
        meta_mode = MetaMode(records["meta_mode"][0])
        beta = float(records["beta"][0])
        theta = np.array([float(v) for v in records["theta"]])
        alpha = np.array([float(v) for v in records["alpha"]])
        rates = InnerRates(alpha if meta_mode is MetaMode.META_SGD else alpha[0])
        return LearnerState(LearnerParams(architecture, theta), rates, beta, meta_mode)
    except (ValueError, IndexError) as error:
        raise ConfigurationError(f"malformed checkpoint: {error}") from error


def save_checkpoint(path: str | Path, state: LearnerState) -> None:
    Path(path).write_text(format_checkpoint(state), encoding="utf-8")


def load_checkpoint(path: str | Path) -> LearnerState:
    return parse_checkpoint(Path(path).read_text(encoding="utf-8"))
