import pytest

from expert_training.utils import get_log_level, get_thread_count


class TestEnvironment:
    """Test cases for environment-driven settings."""

    def test_thread_count_should_default_to_one(self, monkeypatch):
        """Test that an unset variable means serial execution."""
        # Arrange
        monkeypatch.delenv("EXPERT_TRAINING_THREADS", raising=False)

        # Act & Assert
        assert get_thread_count() == 1

    @pytest.mark.parametrize(("value", "expected"), [("4", 4), ("0", 1), ("x", 1)])
    def test_thread_count_should_read_environment(
        self, monkeypatch, value: str, expected: int
    ):
        """Test that the variable is parsed and bad values fall back to one."""
        # Arrange
        monkeypatch.setenv("EXPERT_TRAINING_THREADS", value)

        # Act & Assert
        assert get_thread_count() == expected

    def test_log_level_should_read_environment(self, monkeypatch):
        """Test that LOG_LEVEL selects the log level."""
        # Arrange
        monkeypatch.setenv("LOG_LEVEL", "debug")

        # Act & Assert
        assert get_log_level() == "debug"
