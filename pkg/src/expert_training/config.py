"""Run configuration: a flat `key = value` file overlaid with CLI flags."""

from pathlib import Path

from pydantic import ConfigDict, Field, ValidationError, field_validator

from expert_training.errors import ConfigurationError
from expert_training.models.synth import SynthSpec
from expert_training.models.training.evaluation import TestMode
from expert_training.models.training.plan import TrainPlan, parse_fraction


class RunConfig(TrainPlan):
    model_config = ConfigDict(frozen=True, extra="forbid")

    # inputs and outputs
    dataset: Path | None = None
    taxonomy: Path | None = None
    test_dataset: Path | None = None
    test_taxonomy: Path | None = None
    checkpoint: Path = Path("checkpoint.csv")
    metrics: Path = Path("metrics.csv")
    output: Path | None = None

    # evaluation and inspection
    eval_tasks: int = Field(default=600, ge=1)
    test_mode: TestMode = TestMode.RANDOM
    hardness_tasks: int = Field(default=100, ge=1)
    sample_draws: int = Field(default=10, ge=1)
    sample_kind: str = Field(default="easy", pattern="^(easy|hard)$")
    phase_splits: tuple[float, ...] = (0.0, 0.25, 1 / 3, 0.5, 1.0)
    threads: int | None = Field(default=None, ge=1)

    # synthetic data
    superclasses: int = Field(default=12, ge=1)
    classes_per_superclass: int = Field(default=5, ge=1)
    samples_per_class: int = Field(default=50, ge=1)
    dim: int = Field(default=16, ge=1)
    sigma_sup: float = Field(default=3.0, ge=0.0)
    sigma_cls: float = Field(default=1.0, ge=0.0)
    sigma_noise: float = Field(default=0.5, ge=0.0)
    train_superclasses: int = Field(default=7, ge=1)

    @field_validator("phase_splits", mode="before")
    @classmethod
    def _phase_splits_from_text(cls, value: object) -> object:
        if isinstance(value, str):
            parts = [part.strip() for part in value.split(",")]
            return tuple(parse_fraction(part) for part in parts if part)
        return value

    @field_validator("phase_splits")
    @classmethod
    def _phase_splits_in_range(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if not value or any(not 0.0 <= split <= 1.0 for split in value):
            raise ValueError("phase_splits must be non-empty values in [0, 1]")
        return value

    def to_train_plan(self, **changes: object) -> TrainPlan:
        fields = {name: getattr(self, name) for name in TrainPlan.model_fields}
        fields.update(changes)
        return TrainPlan(**fields)

    def to_synth_spec(self) -> SynthSpec:
        return SynthSpec(
            superclasses=self.superclasses,
            classes_per_superclass=self.classes_per_superclass,
            samples_per_class=self.samples_per_class,
            dim=self.dim,
            sigma_sup=self.sigma_sup,
            sigma_cls=self.sigma_cls,
            sigma_noise=self.sigma_noise,
            seed=self.seed,
        )


def parse_config_text(text: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, separator, value = line.partition("=")
        if not separator or not key.strip():
            raise ConfigurationError(f"config line {line_number}: expected key = value")
        values[key.strip()] = value.strip()
    return values


def load_run_config(
    path: str | Path | None, overrides: dict[str, object] | None = None
) -> RunConfig:
    values: dict[str, object] = {}
    if path is not None:
        config_path = Path(path)
        if not config_path.is_file():
            raise ConfigurationError(f"config file {config_path} does not exist")
        values.update(parse_config_text(config_path.read_text(encoding="utf-8")))

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        return RunConfig.model_validate(values)
    except ValidationError as error:
        problems = "; ".join(
            f"{_location(issue['loc'])}: {issue['msg']}" for issue in error.errors()
        )
        raise ConfigurationError(f"invalid configuration: {problems}") from error


def _location(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc) or "config"
