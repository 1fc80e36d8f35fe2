from pathlib import Path

import numpy as np
import pytest

from expert_training.app import App
from expert_training.models.data_dictionary import load_dataset
from expert_training.models.hardness.report import EPSILON
from expert_training.models.learner.architecture import LearnerArchitecture
from expert_training.models.learner.params import InnerRates, LearnerParams
from expert_training.models.taxonomy import load_taxonomy
from expert_training.models.training.checkpoint import save_checkpoint
from expert_training.models.training.plan import MetaMode
from expert_training.models.training.state import LearnerState


def _train(app: App, synth_dir: Path, plan_file: Path, out: Path, *extra: str) -> int:
    return app.run(
        [
            "train",
            "--config", str(plan_file),
            "--dataset", str(synth_dir / "train.csv"),
            "--taxonomy", str(synth_dir / "train_taxonomy.tsv"),
            "--metrics", str(out / "metrics.csv"),
            "--checkpoint", str(out / "checkpoint.csv"),
            *extra,
        ]
    )  # fmt: skip


def _lines(path: Path) -> list[str]:
    return path.read_text(encoding="utf-8").splitlines()


class TestSynthCommand:
    """Test cases for synthetic dataset generation."""

    def test_synth_should_write_disjoint_train_and_test_files(self, synth_dir: Path):
        """Test that both splits are written with matching taxonomies."""
        # Arrange & Act
        train = load_dataset(synth_dir / "train.csv")
        test = load_dataset(synth_dir / "test.csv")
        train_taxonomy = load_taxonomy(synth_dir / "train_taxonomy.tsv")
        test_taxonomy = load_taxonomy(synth_dir / "test_taxonomy.tsv")

        # Assert
        train.check_taxonomy(train_taxonomy)
        test.check_taxonomy(test_taxonomy)
        assert train.class_count == test.class_count == 12
        assert not set(train.class_ids) & set(test.class_ids)


class TestTrainAndEvalCommands:
    """Test cases for the train and eval subcommands."""

    def test_train_should_write_metrics_and_checkpoint(
        self, app: App, synth_dir: Path, plan_file: Path, tmp_path: Path
    ):
        """Test that a run writes one metrics row per batch plus a checkpoint."""
        # Arrange & Act
        code = _train(app, synth_dir, plan_file, tmp_path, "--measure", "hausdorff")

        # Assert
        assert code == 0
        lines = _lines(tmp_path / "metrics.csv")
        assert lines[0] == (
            "batch_index,first_task_index,phase,schedule,"
            "mean_weighted_loss,mean_TH,min_TH,max_TH"
        )
        assert len(lines) == 1 + 4
        assert lines[1].startswith("0,0,primary,expert,")
        assert lines[2].startswith("1,4,advanced,expert,")
        assert _lines(tmp_path / "checkpoint.csv")[0] == "architecture,6,8,3"

    def test_eval_should_print_result_row(
        self, app: App, synth_dir: Path, plan_file: Path, tmp_path: Path, capsys
    ):
        """Test that all_hard evaluation of a checkpoint prints one CSV row."""
        # Arrange
        assert _train(app, synth_dir, plan_file, tmp_path) == 0

        # Act
        code = app.run(
            [
                "eval",
                "--checkpoint", str(tmp_path / "checkpoint.csv"),
                "--dataset", str(synth_dir / "test.csv"),
                "--taxonomy", str(synth_dir / "test_taxonomy.tsv"),
                "--mode", "all_hard",
                "--tasks", "25",
                "--ways", "3",
                "--queries", "5",
            ]
        )  # fmt: skip

        # Assert
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "mode,V,mean_acc,std_acc,ci95"
        assert lines[1].startswith("all_hard,25,")
        assert 0.0 <= float(lines[1].split(",")[2]) <= 1.0

    def test_runs_should_be_byte_identical_across_thread_counts(
        self, app: App, synth_dir: Path, plan_file: Path, tmp_path: Path
    ):
        """Test that train and eval outputs do not depend on the worker count."""
        # Arrange
        outputs = []
        for threads in ("1", "3"):
            out = tmp_path / f"threads{threads}"
            out.mkdir()

            # Act
            assert _train(app, synth_dir, plan_file, out, "--threads", threads) == 0
            code = app.run(
                [
                    "eval",
                    "--checkpoint", str(out / "checkpoint.csv"),
                    "--dataset", str(synth_dir / "test.csv"),
                    "--tasks", "20",
                    "--ways", "3",
                    "--queries", "5",
                    "--output", str(out / "eval.csv"),
                ]
            )  # fmt: skip
            assert code == 0
            outputs.append(
                [
                    (out / name).read_bytes()
                    for name in ("metrics.csv", "checkpoint.csv", "eval.csv")
                ]
            )

        # Assert
        assert outputs[0] == outputs[1]


class TestInspectionCommands:
    """Test cases for the hardness, sample and sweep subcommands."""

    def test_hardness_should_print_one_row_per_task(
        self, app: App, synth_dir: Path, tmp_path: Path
    ):
        """Test that 100 tasks give 100 positive Hausdorff hardness scores."""
        # Arrange
        output = tmp_path / "hardness.csv"

        # Act
        code = app.run(
            [
                "hardness",
                "--dataset", str(synth_dir / "train.csv"),
                "--measure", "hausdorff",
                "--tasks", "100",
                "--ways", "3",
                "--queries", "5",
                "--output", str(output),
            ]
        )  # fmt: skip

        # Assert
        assert code == 0
        lines = _lines(output)
        assert lines[0] == "task_index,measure,TH"
        assert len(lines) == 101
        assert all(row.split(",")[1] == "hausdorff" for row in lines[1:])
        assert all(float(row.split(",")[2]) > 0 for row in lines[1:])

    def test_hardness_with_checkpoint_should_use_learner_features(
        self, app: App, synth_dir: Path, plan_file: Path, tmp_path: Path
    ):
        """Test that a checkpoint switches scoring to adapted learner features."""
        # Arrange
        assert _train(app, synth_dir, plan_file, tmp_path) == 0
        common = [
            "hardness",
            "--dataset", str(synth_dir / "test.csv"),
            "--measure", "pairwise",
            "--tasks", "5",
            "--ways", "3",
            "--queries", "5",
        ]  # fmt: skip

        # Act
        raw_code = app.run([*common, "--output", str(tmp_path / "raw.csv")])
        learned_code = app.run(
            [
                *common,
                "--checkpoint", str(tmp_path / "checkpoint.csv"),
                "--output", str(tmp_path / "learned.csv"),
            ]
        )  # fmt: skip

        # Assert
        assert raw_code == learned_code == 0
        assert _lines(tmp_path / "raw.csv") != _lines(tmp_path / "learned.csv")

    def test_hardness_with_checkpoint_should_score_learner_features(
        self, app: App, synth_dir: Path, tmp_path: Path
    ):
        """Test that an all-zero hidden layer makes every class coincide."""
        # Arrange
        architecture = LearnerArchitecture(input_dim=6, hidden=(4,), output_dim=3)
        params = LearnerParams(architecture, np.zeros(architecture.parameter_count))
        state = LearnerState(params, InnerRates(0.1), 0.05, MetaMode.MAML)
        save_checkpoint(tmp_path / "zero.csv", state)
        output = tmp_path / "hardness.csv"

        # Act
        code = app.run(
            [
                "hardness",
                "--dataset", str(synth_dir / "test.csv"),
                "--measure", "pairwise",
                "--tasks", "4",
                "--ways", "3",
                "--queries", "5",
                "--checkpoint", str(tmp_path / "zero.csv"),
                "--output", str(output),
            ]
        )  # fmt: skip

        # Assert
        assert code == 0
        scores = [float(row.split(",")[2]) for row in _lines(output)[1:]]
        assert scores == [1.0 / EPSILON] * 4

    def test_sample_should_print_easy_draws(
        self, app: App, synth_dir: Path, capsys
    ):
        """Test that easy draws list one class from each of N superclasses."""
        # Arrange
        taxonomy = load_taxonomy(synth_dir / "train_taxonomy.tsv")

        # Act
        code = app.run(
            [
                "sample",
                "--taxonomy", str(synth_dir / "train_taxonomy.tsv"),
                "--kind", "easy",
                "--count", "7",
                "--ways", "3",
            ]
        )  # fmt: skip

        # Assert
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "draw,kind,class_ids"
        assert len(lines) == 8
        for row in lines[1:]:
            classes = row.split(",")[2:]
            assert len({taxonomy.superclass_of(c) for c in classes}) == 3

    def test_sweep_should_emit_one_row_per_split(
        self, app: App, synth_dir: Path, plan_file: Path, tmp_path: Path
    ):
        """Test that every phase split is trained and evaluated."""
        # Arrange
        output = tmp_path / "sweep.csv"

        # Act
        code = app.run(
            [
                "sweep",
                "--config", str(plan_file),
                "--dataset", str(synth_dir / "train.csv"),
                "--test-dataset", str(synth_dir / "test.csv"),
                "--lambdas", "0,1/2,1",
                "--eval-tasks", "10",
                "--output", str(output),
            ]
        )  # fmt: skip

        # Assert
        assert code == 0
        lines = _lines(output)
        assert lines[0] == "phase_split,mode,V,mean_acc,std_acc,ci95"
        assert [row.split(",")[0] for row in lines[1:]] == ["0.0", "0.5", "1.0"]


class TestExitCodes:
    """Test cases for failure reporting."""

    def test_unknown_subcommand_should_exit_two(self, app: App):
        """Test that argparse usage errors map to exit status 2."""
        # Arrange & Act & Assert
        assert app.run(["fly"]) == 2

    def test_unknown_config_key_should_exit_two(self, app: App, tmp_path: Path):
        """Test that a bad config file is a configuration error."""
        # Arrange
        path = tmp_path / "bad.cfg"
        path.write_text("colour = red\n", encoding="utf-8")

        # Act & Assert
        assert app.run(["sample", "--config", str(path)]) == 2

    def test_missing_dataset_should_exit_two(self, app: App, tmp_path: Path):
        """Test that a missing input path is a configuration error."""
        # Arrange & Act & Assert
        assert app.run(["train", "--dataset", str(tmp_path / "nope.csv")]) == 2

    def test_malformed_dataset_should_exit_one(self, app: App, tmp_path: Path):
        """Test that a runtime failure reading inputs exits with status 1."""
        # Arrange
        path = tmp_path / "broken.csv"
        path.write_text("dim,2\nc1,1.0\n", encoding="utf-8")

        # Act
        code = app.run(["train", "--dataset", str(path), "--schedule", "uniform"])

        # Assert
        assert code == 1

    @pytest.mark.parametrize("schedule", ["semantic", "probabilistic"])
    def test_semantic_schedule_without_taxonomy_should_exit_two(
        self, app: App, synth_dir: Path, schedule: str
    ):
        """Test that taxonomy-driven schedules need a taxonomy file."""
        # Arrange & Act & Assert
        code = app.run(
            [
                "train",
                "--dataset", str(synth_dir / "train.csv"),
                "--schedule", schedule,
            ]
        )  # fmt: skip
        assert code == 2
