import numpy as np
from numpy.typing import NDArray

from expert_training.models.learner.architecture import LearnerArchitecture
from expert_training.models.learner.params import (
    InnerRates,
    LearnerParams,
    init_params,
)
from expert_training.models.rng import Stream, derive_task_rng
from expert_training.models.training.plan import MetaMode, TrainPlan


class LearnerState:
    """Meta-parameters theta, inner rates alpha and the outer rate beta."""

    def __init__(
        self,
        params: LearnerParams,
        rates: InnerRates,
        beta: float,
        meta_mode: MetaMode,
    ):
        if beta <= 0:
            raise ValueError("beta must be > 0")
        if meta_mode is MetaMode.META_SGD and not rates.per_parameter:
            raise ValueError("meta_sgd mode needs one inner rate per parameter")
        if rates.per_parameter and rates.values.shape != params.theta.shape:
            raise ValueError("per-parameter rates must match theta's length")
        self.params = params
        self.rates = rates
        self.beta = beta
        self.meta_mode = meta_mode

    @property
    def architecture(self) -> LearnerArchitecture:
        return self.params.architecture


def initial_state(plan: TrainPlan, input_dim: int) -> LearnerState:
    architecture = LearnerArchitecture(
        input_dim=input_dim, hidden=plan.hidden, output_dim=plan.ways
    )
    params = init_params(architecture, derive_task_rng(plan.seed, 0, Stream.INIT))
    if plan.zero_head:
        params = params.with_theta(zero_head(params.theta, architecture))
    if plan.meta_mode is MetaMode.META_SGD:
        rates = InnerRates(np.full(architecture.parameter_count, plan.inner_lr))
    else:
        rates = InnerRates(plan.inner_lr)
    return LearnerState(params, rates, plan.outer_lr, plan.meta_mode)


def zero_head(
    theta: NDArray[np.float64], architecture: LearnerArchitecture
) -> NDArray[np.float64]:
    """theta with the output layer's weights and biases set to zero."""
    zeroed = np.array(theta, dtype=np.float64)
    zeroed[zeroed.size - architecture.head_size :] = 0.0
    return zeroed
