class ExpertTrainingError(Exception):
    """Base class for every error raised by expert_training."""


class TaxonomyFormatError(ExpertTrainingError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"taxonomy line {line}: " if line is not None else "taxonomy: "
        super().__init__(prefix + message)


class DatasetFormatError(ExpertTrainingError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"dataset line {line}: " if line is not None else "dataset: "
        super().__init__(prefix + message)


class InsufficientSuperclassesError(ExpertTrainingError, ValueError):
    pass


class InsufficientClassesError(ExpertTrainingError, ValueError):
    pass


class InsufficientSamplesError(ExpertTrainingError, ValueError):
    def __init__(self, class_id: str, available: int, required: int):
        self.class_id = class_id
        super().__init__(
            f"class {class_id!r} has {available} samples, {required} required"
        )


class DimensionMismatchError(ExpertTrainingError, ValueError):
    pass


class HardnessInputError(ExpertTrainingError, ValueError):
    pass


class ConfigurationError(ExpertTrainingError, ValueError):
    pass


class NonFiniteLossError(ExpertTrainingError, RuntimeError):
    pass


class LabelOutOfRangeError(ExpertTrainingError, ValueError):
    pass
