"""Desk-scale training experiments; minutes each, deselected by default."""

import numpy as np
import pytest

from expert_training.models.hardness.measure import Measure
from expert_training.models.synth import SynthSpec, generate, split_by_superclass
from expert_training.models.training.evaluation import TestMode, evaluate
from expert_training.models.training.plan import Schedule, TrainPlan
from expert_training.models.training.trainer import train

pytestmark = pytest.mark.slow

TEST_TASKS = 300


def _splits(seed: int):
    data, taxonomy = generate(SynthSpec(seed=seed))
    return split_by_superclass(data, taxonomy, 7)


def _hard_and_easy(plan: TrainPlan, seed: int) -> tuple[float, float]:
    (train_data, train_taxonomy), (test_data, test_taxonomy) = _splits(seed)
    state, _ = train(plan, train_data, train_taxonomy)
    results = [
        evaluate(
            state,
            test_data,
            test_taxonomy,
            TEST_TASKS,
            plan.ways,
            plan.shots,
            plan.queries,
            mode,
            seed,
        ).mean
        for mode in (TestMode.ALL_HARD, TestMode.ALL_EASY)
    ]
    return results[0], results[1]


class TestHardnessOfTestTasks:
    """Easy test tasks should be clearly easier than hard ones."""

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_easy_tasks_should_beat_hard_tasks(self, seed: int):
        """Test that AllEasy accuracy exceeds AllHard by at least 5 points."""
        # Arrange
        plan = TrainPlan(
            tasks=2000, batch_size=4, ways=5, shots=5, queries=10, seed=seed
        )

        # Act
        hard, easy = _hard_and_easy(plan, seed)

        # Assert
        assert easy - hard >= 0.05


class TestCurriculumBenefit:
    """Expert training should not lose to uniform training on hard tasks."""

    def test_expert_hsic_should_match_or_beat_uniform_on_hard_tasks(self):
        """Test five seeds: never 0.5 points worse, better on average."""
        # Arrange
        seeds = range(5)
        expert_scores, uniform_scores = [], []

        for seed in seeds:
            base = TrainPlan(
                tasks=2000,
                batch_size=4,
                ways=5,
                shots=5,
                queries=10,
                phase_split="1/3",
                measure=Measure.HSIC,
                seed=seed,
            )

            # Act
            expert = base.model_copy(update={"schedule": Schedule.EXPERT})
            uniform = base.model_copy(update={"schedule": Schedule.UNIFORM})
            expert_scores.append(_hard_and_easy(expert, seed)[0])
            uniform_scores.append(_hard_and_easy(uniform, seed)[0])

        # Assert
        for expert_hard, uniform_hard in zip(expert_scores, uniform_scores):
            assert expert_hard >= uniform_hard - 0.005
        assert np.mean(expert_scores) > np.mean(uniform_scores)
