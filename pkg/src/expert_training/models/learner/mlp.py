"""Forward pass, softmax cross-entropy, gradients and Hessian-vector products.

Gradients are written out by hand (reverse mode); the Hessian-vector product
is the forward/backward R-operator applied to that same backward pass, so it
is exact wherever no ReLU pre-activation sits on its kink.
"""

import numpy as np
from numpy.typing import NDArray

from expert_training.errors import DimensionMismatchError, LabelOutOfRangeError
from expert_training.models.episode import LabeledBatch
from expert_training.models.learner.params import (
    InnerRates,
    Layer,
    LearnerParams,
    flatten,
    unflatten,
)


class _Trace:
    """Intermediate values of one forward pass over a batch."""

    def __init__(
        self, inputs: list[NDArray[np.float64]], pre: list[NDArray[np.float64]]
    ):
        # inputs[l] feeds layer l; pre[l] is layer l's output before activation
        self.inputs = inputs
        self.pre = pre

    @property
    def logits(self) -> NDArray[np.float64]:
        return self.pre[-1]

    def mask(self, layer: int) -> NDArray[np.float64]:
        return (self.pre[layer] > 0).astype(np.float64)


def _as_matrix(params: LearnerParams, x: NDArray[np.float64]) -> NDArray[np.float64]:
    matrix = np.asarray(x, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix[np.newaxis, :]
    if matrix.ndim != 2 or matrix.shape[1] != params.architecture.input_dim:
        raise DimensionMismatchError(
            f"input has shape {np.shape(x)}, learner expects dim "
            f"{params.architecture.input_dim}"
        )
    return matrix


def _run(layers: list[Layer], x: NDArray[np.float64]) -> _Trace:
    inputs = [x]
    pre: list[NDArray[np.float64]] = []
    activation = x
    for index, (weight, bias) in enumerate(layers):
        z = activation @ weight + bias
        pre.append(z)
        if index < len(layers) - 1:
            activation = np.maximum(z, 0.0)
            inputs.append(activation)
    return _Trace(inputs, pre)


def _softmax(logits: NDArray[np.float64]) -> NDArray[np.float64]:
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def _cross_entropy(logits: NDArray[np.float64], labels: NDArray[np.int64]) -> float:
    shifted = logits - logits.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1))
    picked = shifted[np.arange(labels.shape[0]), labels]
    return float(np.mean(log_norm - picked))


def _check_labels(params: LearnerParams, batch: LabeledBatch) -> None:
    if len(batch) == 0:
        raise ValueError("loss needs a non-empty batch")
    n_out = params.architecture.output_dim
    if batch.labels.min() < 0 or batch.labels.max() >= n_out:
        raise LabelOutOfRangeError(f"labels must lie in 0..{n_out - 1}")


def forward(params: LearnerParams, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """Logits for one feature vector (1-D) or a batch of them (2-D)."""
    logits = _run(params.layers(), _as_matrix(params, x)).logits
    return logits[0] if np.ndim(x) == 1 else logits


def extract_features(
    params: LearnerParams, x: NDArray[np.float64]
) -> NDArray[np.float64]:
    """Post-ReLU activations of the last hidden layer (the input if none)."""
    trace = _run(params.layers(), _as_matrix(params, x))
    features = trace.inputs[-1]
    return features[0] if np.ndim(x) == 1 else features


def loss(params: LearnerParams, batch: LabeledBatch) -> float:
    _check_labels(params, batch)
    logits = _run(params.layers(), _as_matrix(params, batch.features)).logits
    return _cross_entropy(logits, batch.labels)


def loss_and_grad(
    params: LearnerParams, batch: LabeledBatch
) -> tuple[float, NDArray[np.float64]]:
    """Mean softmax cross-entropy over the batch and its gradient w.r.t. theta."""
    _check_labels(params, batch)
    layers = params.layers()
    trace = _run(layers, _as_matrix(params, batch.features))
    n = len(batch)

    delta = _softmax(trace.logits)
    delta[np.arange(n), batch.labels] -= 1.0
    delta /= n

    grads: list[Layer] = []
    for index in reversed(range(len(layers))):
        grads.append((trace.inputs[index].T @ delta, delta.sum(axis=0)))
        if index > 0:
            delta = (delta @ layers[index][0].T) * trace.mask(index - 1)

    return _cross_entropy(trace.logits, batch.labels), flatten(grads[::-1])


def hessian_vector_product(
    params: LearnerParams, batch: LabeledBatch, vector: NDArray[np.float64]
) -> NDArray[np.float64]:
    """H v for the mean cross-entropy Hessian H at theta."""
    _check_labels(params, batch)
    layers = params.layers()
    directions = unflatten(params.architecture, np.asarray(vector, dtype=np.float64))
    trace = _run(layers, _as_matrix(params, batch.features))
    n = len(batch)

    # forward R-pass: directional derivatives of every layer input
    r_inputs = [np.zeros_like(trace.inputs[0])]
    r_pre = np.zeros(0)
    for index, ((weight, _), (d_weight, d_bias)) in enumerate(zip(layers, directions)):
        r_pre = r_inputs[index] @ weight + trace.inputs[index] @ d_weight + d_bias
        if index < len(layers) - 1:
            r_inputs.append(r_pre * trace.mask(index))

    probs = _softmax(trace.logits)
    delta = probs.copy()
    delta[np.arange(n), batch.labels] -= 1.0
    delta /= n
    r_delta = probs * (r_pre - (probs * r_pre).sum(axis=1, keepdims=True)) / n

    products: list[Layer] = []
    for index in reversed(range(len(layers))):
        products.append(
            (
                r_inputs[index].T @ delta + trace.inputs[index].T @ r_delta,
                r_delta.sum(axis=0),
            )
        )
        if index > 0:
            weight, d_weight = layers[index][0], directions[index][0]
            mask = trace.mask(index - 1)
            r_delta = (r_delta @ weight.T + delta @ d_weight.T) * mask
            delta = (delta @ weight.T) * mask

    return flatten(products[::-1])


def apply_step(
    params: LearnerParams,
    alpha: float | NDArray[np.float64],
    grad: NDArray[np.float64],
) -> LearnerParams:
    return params.with_theta(params.theta - alpha * grad)


def inner_update(
    params: LearnerParams, rates: InnerRates, support: LabeledBatch
) -> LearnerParams:
    """One gradient step on the support batch: theta' = theta - alpha * grad."""
    _, grad = loss_and_grad(params, support)
    return apply_step(params, rates.values, grad)


def accuracy(params: LearnerParams, batch: LabeledBatch) -> float:
    logits = forward(params, batch.features)
    return float(np.mean(np.argmax(logits, axis=1) == batch.labels))
