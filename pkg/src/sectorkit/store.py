"""Append-only record store backed by one NDJSON file per record kind.

Records are never rewritten: a correction is a new record that points back
at the one it supersedes (see the evaluation flow). Every append is flushed
and fsynced before the new id is returned, so an acknowledged record
survives a crash. A torn final line, which can only belong to an append
that was never acknowledged, is ignored on load; a malformed line anywhere
else means real corruption and raises.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from .errors import FieldError, NotFoundError, ValidationError

KINDS = frozenset({
    "io_table",
    "linkage_report",
    "structure_report",
    "plan",
    "evaluation",
    "merger_verdict",
})


class StoreCorruptionError(RuntimeError):
    """A non-final line in a store file failed to parse."""


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValidationError(FieldError(
            "kind", f"unknown record kind {kind!r}; expected one of {', '.join(sorted(KINDS))}"))
    return kind


class RecordStore:
    """Filesystem-backed store; safe for concurrent appends in one process."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks = {kind: threading.Lock() for kind in KINDS}
        self._cache: dict[str, dict[str, dict]] = {}

    def _path(self, kind: str) -> Path:
        return self.root / f"{kind}.ndjson"

    def _load(self, kind: str) -> dict[str, dict]:
        records: dict[str, dict] = {}
        path = self._path(kind)
        if not path.exists():
            return records
        with path.open("r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                if i == len(lines) - 1:
                    break
                raise StoreCorruptionError(
                    f"{path} line {i + 1} is not valid JSON") from None
            records[record["id"]] = record
        return records

    def _index(self, kind: str) -> dict[str, dict]:
        if kind not in self._cache:
            self._cache[kind] = self._load(kind)
        return self._cache[kind]

    def persist(self, kind: str, payload: dict) -> dict:
        """Append one record and return it; the id is valid once this returns."""
        _check_kind(kind)
        record = {
            "id": uuid.uuid4().hex,
            "kind": kind,
            "created_at": datetime.now(timezone.utc).isoformat(),
            "schema_version": 1,
            "payload": payload,
        }
        line = json.dumps(record, separators=(",", ":"), allow_nan=False)
        with self._locks[kind]:
            self._mend_tail(self._path(kind))
            with self._path(kind).open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._index(kind)[record["id"]] = record
        return record

    @staticmethod
    def _mend_tail(path: Path) -> None:
        """Repair a file whose last line lost its newline in a crash, the same
        way _load reads it: a parseable tail is terminated and kept, a torn
        fragment is truncated away. Appending without this would fuse the next
        record onto the fragment."""
        if not path.exists() or path.stat().st_size == 0:
            return
        with path.open("rb+") as fh:
            fh.seek(-1, os.SEEK_END)
            if fh.read(1) == b"\n":
                return
            fh.seek(0)
            data = fh.read()
            last_newline = data.rfind(b"\n")
            tail = data[last_newline + 1:]
            try:
                json.loads(tail.decode("utf-8"))
            except (json.JSONDecodeError, UnicodeDecodeError):
                fh.truncate(last_newline + 1)
            else:
                fh.write(b"\n")

    def fetch(self, kind: str, record_id: str) -> dict:
        """Return the full record; rescans the file once on a cache miss so
        records appended by another process are still found."""
        _check_kind(kind)
        index = self._index(kind)
        if record_id not in index:
            with self._locks[kind]:
                self._cache[kind] = self._load(kind)
            index = self._cache[kind]
        if record_id not in index:
            raise NotFoundError(kind, record_id)
        return index[record_id]

    def fetch_payload(self, kind: str, record_id: str) -> dict:
        return self.fetch(kind, record_id)["payload"]

    def list_records(self, kind: str) -> list[dict]:
        """All records of one kind in append order."""
        _check_kind(kind)
        with self._locks[kind]:
            self._cache[kind] = self._load(kind)
        return list(self._cache[kind].values())

    def evaluations_for_plan(self, plan_id: str) -> list[dict]:
        """Every evaluation ever stored for a plan, oldest first; a later
        record supersedes an earlier one without erasing it."""
        return [record for record in self.list_records("evaluation")
                if record["payload"].get("plan_id") == plan_id]
