from collections.abc import Callable, Sequence
from concurrent.futures import Executor
from functools import partial

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from expert_training.errors import NonFiniteLossError
from expert_training.models.episode import Episode
from expert_training.models.hardness.class_feature_set import ClassFeatureSet
from expert_training.models.hardness.measure import Measure
from expert_training.models.hardness.report import task_hardness
from expert_training.models.hardness.weights import Phase, batch_weights
from expert_training.models.learner.mlp import (
    apply_step,
    extract_features,
    hessian_vector_product,
    loss_and_grad,
)
from expert_training.models.learner.params import InnerRates
from expert_training.models.training.plan import MetaMode, Schedule, TrainPlan
from expert_training.models.training.schedule import weighting_phase
from expert_training.models.training.state import LearnerState, zero_head

MIN_INNER_RATE = 1e-6

Vector = NDArray[np.float64]


class TaskOutcome:
    def __init__(
        self,
        task_index: int,
        loss: float,
        hardness: float,
        theta_grad: Vector,
        alpha_grad: Vector,
    ):
        self.task_index = task_index
        self.loss = loss
        self.hardness = hardness
        self.theta_grad = theta_grad
        self.alpha_grad = alpha_grad


class BatchLog(BaseModel):
    model_config = ConfigDict(frozen=True)

    batch_index: int
    first_task_index: int
    phase: Phase
    schedule: Schedule
    losses: tuple[float, ...]
    hardness: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def mean_weighted_loss(self) -> float:
        return float(np.dot(self.weights, self.losses))

    @property
    def mean_hardness(self) -> float:
        return float(np.mean(self.hardness))

    @property
    def min_hardness(self) -> float:
        return min(self.hardness)

    @property
    def max_hardness(self) -> float:
        return max(self.hardness)


def task_meta_gradients(
    support_grad: Vector,
    query_grad: Vector,
    alpha: float | Vector,
    support_hvp: Callable[[Vector], Vector] | None = None,
) -> tuple[Vector, Vector]:
    """Gradients of the query loss at theta' = theta - alpha * support_grad.

    Returns (d/dtheta, d/dalpha). Without `support_hvp` the theta gradient is
    first-order (the support gradient is held constant); with it the
    alpha-weighted support Hessian term is included. The alpha gradient is
    exact either way since alpha only enters the inner step.
    """
    alpha_grad = -query_grad * support_grad
    if support_hvp is None:
        return query_grad, alpha_grad
    return query_grad - support_hvp(alpha * query_grad), alpha_grad


def _task_pass(
    state: LearnerState, episode: Episode, measure: Measure, first_order: bool
) -> TaskOutcome:
    params, alpha = state.params, state.rates.values
    _, support_grad = loss_and_grad(params, episode.support)
    adapted = apply_step(params, alpha, support_grad)

    features = extract_features(adapted, episode.query.features)
    sets = [
        ClassFeatureSet(class_id, features[episode.query.labels == label])
        for label, class_id in enumerate(episode.class_ids)
    ]
    report = task_hardness(sets, measure)

    query_loss, query_grad = loss_and_grad(adapted, episode.query)
    if not np.isfinite(query_loss) or not np.all(np.isfinite(query_grad)):
        raise NonFiniteLossError(
            f"task {episode.task_index}: query loss {query_loss}, "
            f"classes {episode.class_ids}, |theta'|={np.linalg.norm(adapted.theta)}"
        )

    support_hvp: Callable[[Vector], Vector] | None = None
    if not first_order:
        support_hvp = partial(hessian_vector_product, params, episode.support)

    theta_grad, alpha_grad = task_meta_gradients(
        support_grad, query_grad, alpha, support_hvp
    )
    return TaskOutcome(
        episode.task_index, query_loss, report.score, theta_grad, alpha_grad
    )


def meta_batch_step(
    state: LearnerState,
    episodes: Sequence[Episode],
    plan: TrainPlan,
    phase: Phase,
    batch_index: int = 0,
    executor: Executor | None = None,
) -> tuple[LearnerState, BatchLog]:
    """Adapt on each task, score its hardness, and apply one reweighted meta-update."""
    if not episodes:
        raise ValueError("a meta-batch needs at least one episode")

    def run(episode: Episode) -> TaskOutcome:
        return _task_pass(state, episode, plan.measure, plan.first_order)

    # map() keeps episode order, so the reduction below is order-stable
    mapper = executor.map if executor is not None else map
    outcomes = list(mapper(run, episodes))

    scores = [outcome.hardness for outcome in outcomes]
    branch = weighting_phase(plan.schedule, phase)
    if branch is None:
        weights = [1.0 / len(outcomes)] * len(outcomes)
    else:
        weights = batch_weights(scores, branch)

    meta_grad = np.zeros_like(state.params.theta)
    alpha_grad = np.zeros_like(state.params.theta)
    for weight, outcome in zip(weights, outcomes):
        meta_grad += weight * outcome.theta_grad
        alpha_grad += weight * outcome.alpha_grad

    theta = state.params.theta - state.beta * meta_grad
    if plan.zero_head:
        theta = zero_head(theta, state.architecture)
    if not np.all(np.isfinite(theta)):
        raise NonFiniteLossError(
            f"meta-update from task {episodes[0].task_index} left theta non-finite"
        )

    rates = state.rates
    if state.meta_mode is MetaMode.META_SGD:
        alpha = rates.values - state.beta * alpha_grad
        rates = InnerRates(np.maximum(alpha, MIN_INNER_RATE))

    new_state = LearnerState(
        state.params.with_theta(theta), rates, state.beta, state.meta_mode
    )
    log = BatchLog(
        batch_index=batch_index,
        first_task_index=episodes[0].task_index,
        phase=phase,
        schedule=plan.schedule,
        losses=tuple(outcome.loss for outcome in outcomes),
        hardness=tuple(scores),
        weights=tuple(weights),
    )
    return new_state, log


METRICS_HEADER = (
    "batch_index,first_task_index,phase,schedule,"
    "mean_weighted_loss,mean_TH,min_TH,max_TH"
)


def metrics_row(log: BatchLog) -> str:
    return ",".join(
        [
            str(log.batch_index),
            str(log.first_task_index),
            str(log.phase),
            str(log.schedule),
            repr(log.mean_weighted_loss),
            repr(log.mean_hardness),
            repr(log.min_hardness),
            repr(log.max_hardness),
        ]
    )
