import numpy as np
import pytest

from expert_training.models.data_dictionary import DataDictionary
from expert_training.models.episode import LabeledBatch, random_episode
from expert_training.models.learner.mlp import accuracy, forward, inner_update
from expert_training.models.training.plan import MetaMode, TrainPlan
from expert_training.models.training.state import initial_state


def _relabel(batch: LabeledBatch, order: np.ndarray) -> LabeledBatch:
    return LabeledBatch(batch.features, order[batch.labels])


class TestInitialState:
    """Test cases for the meta-parameters a run starts from."""

    def test_zero_head_should_clear_only_the_output_layer(self):
        """Test that the last (hidden + 1) * N entries of theta are zero."""
        # Arrange
        plan = TrainPlan(ways=4, hidden=(6, 5))

        # Act
        state = initial_state(plan, 3)

        # Assert
        theta = state.params.theta
        assert state.architecture.head_size == 24
        assert np.all(theta[-24:] == 0.0)
        assert np.all(theta[: 3 * 6] != 0.0)

    def test_random_head_should_be_kept_when_disabled(self):
        """Test that zero_head = false leaves the initialised output weights."""
        # Arrange
        plan = TrainPlan(ways=4, hidden=(6, 5), zero_head=False)

        # Act
        state = initial_state(plan, 3)

        # Assert
        assert np.count_nonzero(state.params.theta[-24:-4]) == 20

    @pytest.mark.parametrize("meta_mode", [MetaMode.MAML, MetaMode.META_SGD])
    def test_inner_rates_should_start_at_inner_lr(self, meta_mode: MetaMode):
        """Test the scalar and per-parameter starting rates."""
        # Arrange
        plan = TrainPlan(ways=3, hidden=(4,), inner_lr=0.2, meta_mode=meta_mode)

        # Act
        state = initial_state(plan, 2)

        # Assert
        assert np.all(state.rates.values == 0.2)
        assert state.rates.per_parameter is (meta_mode is MetaMode.META_SGD)
        assert state.beta == plan.outer_lr

    def test_zero_head_should_make_adaptation_label_agnostic(
        self, small_data: DataDictionary, rng: np.random.Generator
    ):
        """Test that permuting a task's labels permutes the adapted logits."""
        # Arrange
        state = initial_state(TrainPlan(ways=4, hidden=(8,)), small_data.dim)
        episode = random_episode(small_data, 4, 3, 5, rng)
        order = np.array([2, 0, 3, 1])

        # Act
        adapted = inner_update(state.params, state.rates, episode.support)
        relabelled = inner_update(
            state.params, state.rates, _relabel(episode.support, order)
        )

        # Assert
        logits = forward(adapted, episode.query.features)
        moved = forward(relabelled, episode.query.features)
        np.testing.assert_allclose(moved[:, order], logits, rtol=1e-12, atol=1e-15)
        assert accuracy(relabelled, _relabel(episode.query, order)) == accuracy(
            adapted, episode.query
        )
