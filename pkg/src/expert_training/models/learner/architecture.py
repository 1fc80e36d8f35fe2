from pydantic import BaseModel, ConfigDict, Field


class LearnerArchitecture(BaseModel):
    """Fully-connected ReLU network: input -> hidden... -> output logits."""

    model_config = ConfigDict(frozen=True)

    input_dim: int = Field(ge=1)
    hidden: tuple[int, ...] = (64, 32)
    output_dim: int = Field(ge=1)

    @property
    def widths(self) -> list[int]:
        return [self.input_dim, *self.hidden, self.output_dim]

    @property
    def layer_shapes(self) -> list[tuple[int, int]]:
        widths = self.widths
        return list(zip(widths[:-1], widths[1:]))

    @property
    def parameter_count(self) -> int:
        return sum(fan_in * fan_out + fan_out for fan_in, fan_out in self.layer_shapes)

    @property
    def feature_dim(self) -> int:
        return self.hidden[-1] if self.hidden else self.input_dim

    @property
    def head_size(self) -> int:
        """Entries of the output layer, which sit at the end of theta."""
        return (self.feature_dim + 1) * self.output_dim
