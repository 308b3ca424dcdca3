"""File-backed persistence of named estimation scenarios.

One JSON document holds every record; writes replace the file atomically
(write to a temp file in the same directory, fsync, rename), so a reader
never observes a torn document and a failed write leaves the previous
content intact.

Concurrency contract: one writing handle per store file; concurrent reads
against the in-memory snapshot are fine.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import NotFoundError, StoreError, ValidationError
from .model import ProjectSpec
from .specio import spec_from_mapping, spec_to_mapping

ENV_STORE = "COCOEST_STORE"
DEFAULT_STORE_FILENAME = "cocoest-scenarios.json"

_DOCUMENT_VERSION = 1


def resolve_store_path(path: str | Path | None = None) -> Path:
    """Store file: explicit path, else $COCOEST_STORE, else ./cocoest-scenarios.json."""
    if path is not None:
        return Path(path)
    env_path = os.environ.get(ENV_STORE)
    if env_path:
        return Path(env_path)
    return Path(DEFAULT_STORE_FILENAME)


@dataclass(frozen=True)
class ScenarioRecord:
    id: str
    name: str
    spec: ProjectSpec
    created_at: datetime
    notes: str | None = None


def _new_id() -> str:
    # Hex nanosecond timestamp prefix keeps ids time-ordered; the random
    # suffix keeps them unique even within one nanosecond.
    return f"{time.time_ns():016x}-{secrets.token_hex(4)}"


def record_to_mapping(record: ScenarioRecord) -> dict:
    return {
        "id": record.id,
        "name": record.name,
        "notes": record.notes,
        "created_at": record.created_at.isoformat(),
        "spec": spec_to_mapping(record.spec),
    }


def record_from_mapping(doc: dict) -> ScenarioRecord:
    return ScenarioRecord(
        id=doc["id"],
        name=doc["name"],
        notes=doc.get("notes"),
        created_at=datetime.fromisoformat(doc["created_at"]),
        spec=spec_from_mapping(doc["spec"]),
    )


class ScenarioStore:
    """All scenario records behind one JSON file."""

    def __init__(self, path: str | Path | None = None):
        self.path = resolve_store_path(path)
        self._records: dict[str, ScenarioRecord] | None = None

    def _load(self) -> dict[str, ScenarioRecord]:
        if self._records is None:
            if self.path.exists():
                try:
                    doc = json.loads(self.path.read_text(encoding="utf-8"))
                except (OSError, json.JSONDecodeError) as exc:
                    raise StoreError(f"cannot read store {self.path}: {exc}") from None
                records = [record_from_mapping(item) for item in doc["scenarios"]]
                self._records = {record.id: record for record in records}
            else:
                self._records = {}
        return self._records

    def _write(self, records: dict[str, ScenarioRecord]) -> None:
        ordered = sorted(
            records.values(), key=lambda r: (r.created_at, r.id), reverse=True
        )
        doc = {
            "version": _DOCUMENT_VERSION,
            "scenarios": [record_to_mapping(record) for record in ordered],
        }
        payload = json.dumps(doc, indent=2)
        directory = self.path.resolve().parent
        fd, tmp_path = tempfile.mkstemp(prefix=".cocoest-", suffix=".tmp", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(payload)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp_path, self.path)
        except OSError as exc:
            try:
                os.unlink(tmp_path)
            except OSError:
                pass
            raise StoreError(f"cannot write store {self.path}: {exc}") from None
        self._records = records

    def save(
        self, name: str, spec: ProjectSpec, notes: str | None = None
    ) -> ScenarioRecord:
        """Validate, assign an id, and persist. The store is unchanged on error."""
        if not name or not name.strip():
            raise ValidationError("scenario name must be non-empty", field="name")
        spec.validate()
        records = dict(self._load())
        record_id = _new_id()
        while record_id in records:
            record_id = _new_id()
        record = ScenarioRecord(
            id=record_id,
            name=name.strip(),
            spec=spec,
            created_at=datetime.now(timezone.utc),
            notes=notes,
        )
        records[record.id] = record
        self._write(records)
        return record

    def get(self, record_id: str) -> ScenarioRecord:
        try:
            return self._load()[record_id]
        except KeyError:
            raise NotFoundError(f"scenario {record_id!r} not found") from None

    def list(self) -> list[ScenarioRecord]:
        """All records, newest first."""
        return sorted(
            self._load().values(), key=lambda r: (r.created_at, r.id), reverse=True
        )

    def delete(self, record_id: str) -> None:
        records = dict(self._load())
        if record_id not in records:
            raise NotFoundError(f"scenario {record_id!r} not found")
        del records[record_id]
        self._write(records)
