from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from expert_training.errors import (
    ConfigurationError,
    DatasetFormatError,
    DimensionMismatchError,
)
from expert_training.models.ids import ClassId
from expert_training.models.taxonomy import Taxonomy


class DataDictionary:
    """Feature vectors grouped by class, in first-appearance order."""

    def __init__(self, samples: dict[ClassId, NDArray[np.float64]]):
        if not samples:
            raise DatasetFormatError("no classes")

        self._samples: dict[ClassId, NDArray[np.float64]] = {}
        dim: int | None = None
        for class_id, rows in samples.items():
            matrix = np.array(rows, dtype=np.float64, ndmin=2)
            if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
                raise DimensionMismatchError(
                    f"class {class_id!r} needs a non-empty (samples, dim) matrix"
                )
            if dim is None:
                dim = matrix.shape[1]
            elif matrix.shape[1] != dim:
                raise DimensionMismatchError(
                    f"class {class_id!r} has dim {matrix.shape[1]}, expected {dim}"
                )
            matrix.setflags(write=False)
            self._samples[class_id] = matrix

        assert dim is not None
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def class_ids(self) -> list[ClassId]:
        return list(self._samples)

    @property
    def class_count(self) -> int:
        return len(self._samples)

    def samples(self, class_id: ClassId) -> NDArray[np.float64]:
        return self._samples[class_id]

    def sample_count(self, class_id: ClassId) -> int:
        return self._samples[class_id].shape[0]

    def subset(self, class_ids: list[ClassId]) -> "DataDictionary":
        return DataDictionary({c: self._samples[c] for c in class_ids})

    def check_taxonomy(self, taxonomy: Taxonomy) -> None:
        data_ids = set(self._samples)
        taxonomy_ids = set(taxonomy.class_ids)
        if data_ids != taxonomy_ids:
            missing = sorted(taxonomy_ids - data_ids)[:5]
            extra = sorted(data_ids - taxonomy_ids)[:5]
            raise ConfigurationError(
                "dataset and taxonomy classes differ "
                f"(in taxonomy only: {missing}, in dataset only: {extra})"
            )


def parse_dataset(text: str) -> DataDictionary:
    """Parse the `dim,<d>` header followed by `<class>,<f1>,...,<fd>` rows."""
    lines = text.splitlines()
    header_index = next(
        (i for i, line in enumerate(lines) if line.strip()), None
    )
    if header_index is None:
        raise DatasetFormatError("empty file")

    header = [field.strip() for field in lines[header_index].split(",")]
    if len(header) != 2 or header[0] != "dim":
        raise DatasetFormatError("expected header 'dim,<d>'", line=header_index + 1)
    try:
        dim = int(header[1])
    except ValueError:
        raise DatasetFormatError(
            f"dimension {header[1]!r} is not an integer", line=header_index + 1
        ) from None
    if dim < 1:
        raise DatasetFormatError("dimension must be >= 1", line=header_index + 1)

    rows: dict[ClassId, list[list[float]]] = {}
    for line_number, raw in enumerate(
        lines[header_index + 1 :], start=header_index + 2
    ):
        line = raw.strip()
        if not line:
            continue

        fields = [field.strip() for field in line.split(",")]
        if not fields[0]:
            raise DatasetFormatError("empty class id", line=line_number)
        if len(fields) - 1 != dim:
            raise DatasetFormatError(
                f"expected {dim} features, found {len(fields) - 1}", line=line_number
            )
        try:
            features = [float(value) for value in fields[1:]]
        except ValueError:
            raise DatasetFormatError("non-numeric feature", line=line_number) from None
        if not all(np.isfinite(features)):
            raise DatasetFormatError("non-finite feature", line=line_number)

        rows.setdefault(fields[0], []).append(features)

    if not rows:
        raise DatasetFormatError("no samples after header")

    return DataDictionary({c: np.array(r, dtype=np.float64) for c, r in rows.items()})


def load_dataset(path: str | Path) -> DataDictionary:
    return parse_dataset(Path(path).read_text(encoding="utf-8"))


def format_dataset(data: DataDictionary) -> str:
    lines = [f"dim,{data.dim}"]
    for class_id in data.class_ids:
        for row in data.samples(class_id):
            lines.append(",".join([class_id, *(repr(float(v)) for v in row)]))
    return "\n".join(lines) + "\n"


def write_dataset(path: str | Path, data: DataDictionary) -> None:
    Path(path).write_text(format_dataset(data), encoding="utf-8")
