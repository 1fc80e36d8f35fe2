from enum import StrEnum


class TaskKind(StrEnum):
    RANDOM = "random"
    EASY = "easy"
    HARD = "hard"

    def opposite(self) -> "TaskKind":
        if self is TaskKind.EASY:
            return TaskKind.HARD
        if self is TaskKind.HARD:
            return TaskKind.EASY
        return self
