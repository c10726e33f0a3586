"""Character-unigram bag-of-words benchmark features.

Each character of the number token (attached symbols included) is mapped to
its 0-255 code value; codes above 255 land in the overflow bucket 255. A
capped vocabulary assigns columns in order of first appearance over the
training tokens, and encoding counts the in-vocabulary grams of a token.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable

import numpy as np

DEFAULT_CAP = 1000
_OVERFLOW = 255


@dataclass(frozen=True)
class BowVocab:
    byte_to_column: dict[int, int]
    cap: int

    @property
    def size(self) -> int:
        return len(self.byte_to_column)

    def fingerprint(self) -> str:
        digest = hashlib.sha256()
        digest.update(str(self.cap).encode())
        for byte in sorted(self.byte_to_column):
            digest.update(f"\n{byte}:{self.byte_to_column[byte]}".encode())
        return digest.hexdigest()


def unigrams(token_raw: str) -> list[str]:
    """One single-character gram per character, in order."""
    return list(token_raw)


def gram_byte(gram: str) -> int:
    """Code value of a single-character gram, clamped to the 0-255 range."""
    if len(gram) != 1:
        raise ValueError(f"gram must be a single character, got {gram!r}")
    return min(ord(gram), _OVERFLOW)


def build_vocab(training_tokens: Iterable[str], cap: int = DEFAULT_CAP) -> BowVocab:
    """Assign columns to distinct byte values in first-appearance order."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    byte_to_column: dict[int, int] = {}
    for token in training_tokens:
        for gram in unigrams(token):
            byte = gram_byte(gram)
            if byte not in byte_to_column and len(byte_to_column) < cap:
                byte_to_column[byte] = len(byte_to_column)
    return BowVocab(byte_to_column=byte_to_column, cap=cap)


def bow_encode(token_raw: str, vocab: BowVocab) -> np.ndarray:
    """Count in-vocabulary gram bytes; out-of-vocabulary grams are dropped."""
    counts = np.zeros(vocab.size, dtype=np.int64)
    for gram in unigrams(token_raw):
        column = vocab.byte_to_column.get(gram_byte(gram))
        if column is not None:
            counts[column] += 1
    return counts
