from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from expert_training.models.hardness.measure import Measure


class Schedule(StrEnum):
    UNIFORM = "uniform"
    EXPERT = "expert"
    REVERSED = "reversed"
    PROBABILISTIC = "probabilistic"
    SEMANTIC = "semantic"

    @property
    def needs_taxonomy(self) -> bool:
        return self in (Schedule.PROBABILISTIC, Schedule.SEMANTIC)


class MetaMode(StrEnum):
    MAML = "maml"
    META_SGD = "meta_sgd"


def parse_fraction(value: object) -> object:
    """Accept `1/3` style strings wherever a float is expected."""
    if isinstance(value, str) and "/" in value:
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"{value!r} is not a fraction") from None
    return value


class TrainPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    tasks: int = Field(default=2000, ge=1)
    batch_size: int = Field(default=4, ge=1)
    phase_split: float = Field(default=1 / 3, ge=0.0, le=1.0)
    ways: int = Field(default=5, ge=2)
    shots: int = Field(default=5, ge=1)
    queries: int = Field(default=20, ge=1)
    outer_lr: float = Field(default=0.05, gt=0.0)
    inner_lr: float = Field(default=0.5, gt=0.0)
    measure: Measure = Measure.HSIC
    schedule: Schedule = Schedule.EXPERT
    probability: float = Field(default=0.8, gt=0.0, lt=1.0)
    meta_mode: MetaMode = MetaMode.META_SGD
    first_order: bool = True
    # output layer held at zero; each task builds its head in the inner step
    zero_head: bool = True
    seed: int = Field(default=0, ge=0)
    hidden: tuple[int, ...] = (64, 32)

    @field_validator("phase_split", mode="before")
    @classmethod
    def _phase_split_fraction(cls, value: object) -> object:
        return parse_fraction(value)

    @field_validator("hidden", mode="before")
    @classmethod
    def _hidden_from_text(cls, value: object) -> object:
        if isinstance(value, str):
            return tuple(int(part) for part in value.split(",") if part.strip())
        return value

    @model_validator(mode="after")
    def _check_batching(self) -> "TrainPlan":
        if self.batch_size > self.tasks:
            raise ValueError(
                f"batch_size {self.batch_size} exceeds tasks {self.tasks}"
            )
        if any(width < 1 for width in self.hidden):
            raise ValueError("hidden widths must be >= 1")
        return self

    @property
    def primary_tasks(self) -> int:
        return int(self.phase_split * self.tasks)

    @property
    def batch_count(self) -> int:
        return -(-self.tasks // self.batch_size)
