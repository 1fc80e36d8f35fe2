from pathlib import Path

import pytest

from expert_training.app import App

PLAN = """\
# small desk run
tasks = 16
batch_size = 4
phase_split = 1/4
ways = 3
shots = 2
queries = 5
hidden = 8
measure = hsic
schedule = expert
seed = 5
"""


@pytest.fixture
def app() -> App:
    return App()


@pytest.fixture
def synth_dir(app: App, tmp_path: Path) -> Path:
    """Train/test datasets of three superclasses each, four classes apiece."""
    output = tmp_path / "data"
    code = app.run(
        [
            "synth",
            "--output", str(output),
            "--superclasses", "6",
            "--classes-per-superclass", "4",
            "--samples-per-class", "20",
            "--dim", "6",
            "--train-superclasses", "3",
            "--seed", "1",
        ]
    )  # fmt: skip
    assert code == 0
    return output


@pytest.fixture
def plan_file(tmp_path: Path) -> Path:
    path = tmp_path / "plan.cfg"
    path.write_text(PLAN, encoding="utf-8")
    return path
