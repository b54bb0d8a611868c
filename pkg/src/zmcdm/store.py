"""File-backed problem store: one JSON document per problem id.

Writes go to a temp file in the same directory and are renamed into
place, so a crash never leaves a torn document.  Updates carry a
monotonically increasing revision; an update against a stale revision is
rejected so concurrent editors cannot silently overwrite each other.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path


class UnknownProblemError(LookupError):
    def __init__(self, problem_id: str):
        self.problem_id = problem_id
        super().__init__(f"no stored problem with id {problem_id!r}")


class StaleRevisionError(ValueError):
    def __init__(self, problem_id: str, expected: int, actual: int):
        self.problem_id = problem_id
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"problem {problem_id!r} is at revision {actual}, "
            f"update expected {expected}"
        )


@dataclass(frozen=True)
class StoredProblem:
    id: str
    revision: int
    created_at: str
    updated_at: str
    document: dict

    def meta(self) -> dict:
        name = self.document.get("name", "") if isinstance(self.document, dict) else ""
        return {
            "id": self.id,
            "name": name,
            "revision": self.revision,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class ProblemStore:
    """Thread-safe CRUD over a directory of problem documents."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._mutex = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}

    def _lock_for(self, problem_id: str) -> threading.Lock:
        with self._mutex:
            lock = self._locks.get(problem_id)
            if lock is None:
                lock = threading.Lock()
                self._locks[problem_id] = lock
            return lock

    def _path(self, problem_id: str) -> Path:
        return self.root / f"{problem_id}.json"

    def _write(self, record: StoredProblem) -> None:
        payload = {
            "id": record.id,
            "revision": record.revision,
            "created_at": record.created_at,
            "updated_at": record.updated_at,
            "document": record.document,
        }
        target = self._path(record.id)
        tmp = target.with_name(f".{record.id}.{uuid.uuid4().hex}.tmp")
        tmp.write_text(json.dumps(payload, indent=2), encoding="utf-8")
        os.replace(tmp, target)

    def _read(self, problem_id: str) -> StoredProblem:
        path = self._path(problem_id)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UnknownProblemError(problem_id) from None
        return StoredProblem(
            id=raw["id"],
            revision=raw["revision"],
            created_at=raw["created_at"],
            updated_at=raw["updated_at"],
            document=raw["document"],
        )

    def create(self, document: dict) -> StoredProblem:
        problem_id = uuid.uuid4().hex[:12]
        while self._path(problem_id).exists():
            problem_id = uuid.uuid4().hex[:12]
        now = _now()
        record = StoredProblem(
            id=problem_id, revision=1, created_at=now, updated_at=now,
            document=document,
        )
        with self._lock_for(problem_id):
            self._write(record)
        return record

    def get(self, problem_id: str) -> StoredProblem:
        return self._read(problem_id)

    def list(self) -> list[StoredProblem]:
        records = []
        for path in sorted(self.root.glob("*.json")):
            try:
                records.append(self._read(path.stem))
            except (UnknownProblemError, KeyError, json.JSONDecodeError):
                continue
        records.sort(key=lambda r: (r.created_at, r.id))
        return records

    def update(
        self, problem_id: str, document: dict, expected_revision: int | None = None
    ) -> StoredProblem:
        with self._lock_for(problem_id):
            current = self._read(problem_id)
            if expected_revision is not None and expected_revision != current.revision:
                raise StaleRevisionError(problem_id, expected_revision, current.revision)
            record = StoredProblem(
                id=problem_id,
                revision=current.revision + 1,
                created_at=current.created_at,
                updated_at=_now(),
                document=document,
            )
            self._write(record)
            return record

    def delete(self, problem_id: str) -> None:
        with self._lock_for(problem_id):
            try:
                self._path(problem_id).unlink()
            except FileNotFoundError:
                raise UnknownProblemError(problem_id) from None
