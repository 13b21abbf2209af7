from typing import Any, TYPE_CHECKING

from django.db.models import Manager

if TYPE_CHECKING:
    from kuperberg.evaluator.invariants import InvariantResult
    from kuperberg.models import InvariantRecord

RECORD_KEY_FIELDS: tuple[str, ...] = ("algebra", "diagram", "degree_offset", "convention")


class InvariantRecordManager(Manager):
    use_in_migrations: bool = True

    def record(self, result: "InvariantResult", convention: str | None = None) -> "InvariantRecord":
        """
            Stores a computed invariant, replacing the value previously stored
            for the same algebra, diagram, degree offset & convention.
        """

        fields: dict[str, Any] = result.as_record_fields()
        if convention is not None:
            fields["convention"] = convention
        key: dict[str, Any] = {field_name: fields.pop(field_name) for field_name in RECORD_KEY_FIELDS}

        existing: "InvariantRecord | None" = self.filter(**key).first()
        if existing is None:
            record: "InvariantRecord" = self.model(**key, **fields)
            record.save(using=self._db)
            return record

        existing.update(using=self._db, **fields)
        return existing
