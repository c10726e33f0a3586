"""The six number-format categories and their canonical ordering."""

from __future__ import annotations

from enum import IntEnum


class FormatLabel(IntEnum):
    """Semantic category of a numeric token.

    The integer values fix the canonical ordering used for deterministic
    tie-breaks and for confusion-matrix row/column order.
    """

    Date = 0
    Time = 1
    Phone = 2
    Currency = 3
    Measurement = 4
    Percentage = 5

    @classmethod
    def from_name(cls, name: str) -> "FormatLabel":
        try:
            return cls[name]
        except KeyError:
            valid = ", ".join(l.name for l in cls)
            raise ValueError(f"unknown format label {name!r} (expected one of: {valid})") from None


LABELS: tuple[FormatLabel, ...] = tuple(FormatLabel)
