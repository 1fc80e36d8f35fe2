from functools import cached_property
from pathlib import Path

from pydantic import BaseModel, ConfigDict, model_validator

from expert_training.errors import TaxonomyFormatError
from expert_training.models.ids import ClassId, SuperclassId


class Superclass(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: SuperclassId
    classes: tuple[ClassId, ...]


class Taxonomy(BaseModel):
    """Two-level label hierarchy: superclasses in file order, each owning classes."""

    model_config = ConfigDict(frozen=True)

    superclasses: tuple[Superclass, ...]

    @model_validator(mode="after")
    def _check_invariants(self) -> "Taxonomy":
        if not self.superclasses:
            raise ValueError("no superclasses")
        seen_superclasses: set[SuperclassId] = set()
        seen_classes: set[ClassId] = set()
        for superclass in self.superclasses:
            if not superclass.id:
                raise ValueError("empty superclass id")
            if superclass.id in seen_superclasses:
                raise ValueError(f"duplicate superclass {superclass.id!r}")
            if not superclass.classes:
                raise ValueError(f"superclass {superclass.id!r} is empty")
            seen_superclasses.add(superclass.id)
            for class_id in superclass.classes:
                if not class_id:
                    raise ValueError("empty class id")
                if class_id in seen_classes:
                    raise ValueError(f"duplicate class {class_id!r}")
                seen_classes.add(class_id)
        return self

    @property
    def superclass_count(self) -> int:
        return len(self.superclasses)

    @property
    def class_count(self) -> int:
        return sum(self.sizes)

    @property
    def sizes(self) -> list[int]:
        return [len(superclass.classes) for superclass in self.superclasses]

    @property
    def class_ids(self) -> list[ClassId]:
        return [c for superclass in self.superclasses for c in superclass.classes]

    @cached_property
    def owners(self) -> dict[ClassId, SuperclassId]:
        return {c: s.id for s in self.superclasses for c in s.classes}

    def superclass_of(self, class_id: ClassId) -> SuperclassId:
        return self.owners[class_id]

    def restricted_to(self, superclass_ids: list[SuperclassId]) -> "Taxonomy":
        keep = set(superclass_ids)
        return Taxonomy(
            superclasses=tuple(s for s in self.superclasses if s.id in keep)
        )


def parse_taxonomy(text: str) -> Taxonomy:
    """Parse `<superclass>\\t<class>` records; `#` comments and blank lines skipped."""
    members: dict[SuperclassId, list[ClassId]] = {}
    first_line: dict[ClassId, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        fields = [field.strip() for field in line.split("\t")]
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise TaxonomyFormatError(
                "expected '<superclass>\\t<class>'", line=line_number
            )

        superclass_id, class_id = fields
        if "," in class_id:
            raise TaxonomyFormatError(
                f"class id {class_id!r} contains a comma", line=line_number
            )
        if class_id in first_line:
            raise TaxonomyFormatError(
                f"duplicate class {class_id!r} (first seen on line "
                f"{first_line[class_id]})",
                line=line_number,
            )
        first_line[class_id] = line_number
        members.setdefault(superclass_id, []).append(class_id)

    if not members:
        raise TaxonomyFormatError("file has no records")

    return Taxonomy(
        superclasses=tuple(
            Superclass(id=superclass_id, classes=tuple(classes))
            for superclass_id, classes in members.items()
        )
    )


def load_taxonomy(path: str | Path) -> Taxonomy:
    return parse_taxonomy(Path(path).read_text(encoding="utf-8"))


def format_taxonomy(taxonomy: Taxonomy) -> str:
    lines = [
        f"{superclass.id}\t{class_id}"
        for superclass in taxonomy.superclasses
        for class_id in superclass.classes
    ]
    return "\n".join(lines) + "\n"
