"""Shared error types.

Every domain validator raises :class:`ValidationError` carrying field-level
detail, so the CLI and HTTP layers can report the offending coordinates
without re-parsing message strings.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldError:
    """One offending field (or matrix coordinate) and what is wrong with it."""

    field: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"field": self.field, "message": self.message}


class ValidationError(ValueError):
    """A domain value violates its invariants.

    ``errors`` holds one :class:`FieldError` per violation; the exception
    message joins them for plain-text consumers.
    """

    def __init__(self, errors: list[FieldError] | FieldError | str, *, context: str = ""):
        if isinstance(errors, str):
            errors = [FieldError(field=context or "value", message=errors)]
        elif isinstance(errors, FieldError):
            errors = [errors]
        self.errors: tuple[FieldError, ...] = tuple(errors)
        text = "; ".join(f"{e.field}: {e.message}" for e in self.errors)
        super().__init__(text)

    def to_dicts(self) -> list[dict[str, str]]:
        return [e.to_dict() for e in self.errors]


class NotFoundError(KeyError):
    """A record id does not exist in the store."""

    def __init__(self, kind: str, record_id: str):
        self.kind = kind
        self.record_id = record_id
        super().__init__(f"no {kind} record with id {record_id!r}")
