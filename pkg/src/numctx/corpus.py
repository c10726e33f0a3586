"""Labeled-sentence corpus: CSV I/O, validation, and stratified folds.

Corpus files are UTF-8 CSV with header ``id,text,start,end,label`` and
RFC 4180 quoting. ``start``/``end`` are character offsets (Unicode scalar
values, end exclusive) of one number token inside ``text``; a sentence
containing several numbers appears as several rows sharing the text but
carrying distinct ids and spans.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .labels import LABELS, FormatLabel
from .locator import locate_numbers

_HEADER = ["id", "text", "start", "end", "label"]


class CorpusError(Exception):
    """Base class for corpus-file problems."""


class CorpusParseError(CorpusError):
    pass


class LabelError(CorpusError):
    pass


class SpanError(CorpusError):
    pass


class DuplicateIdError(CorpusError):
    pass


class StratificationError(CorpusError):
    pass


@dataclass(frozen=True)
class LabeledSentence:
    id: str
    text: str
    span: tuple[int, int]
    label: FormatLabel


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[LabeledSentence, ...]

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __getitem__(self, index: int) -> LabeledSentence:
        return self.sentences[index]

    def class_counts(self) -> dict[FormatLabel, int]:
        counts = {label: 0 for label in LABELS}
        for sentence in self.sentences:
            counts[sentence.label] += 1
        return counts


@dataclass(frozen=True)
class RowIssue:
    """A problem found in one corpus row; ``error`` carries the message."""

    line: int
    row_id: str | None
    error: CorpusError = field(compare=False)


def _normalize_newlines(text: str) -> str:
    return text.replace("\r\n", "\n").replace("\r", "\n")


def scan_corpus(path: str | Path) -> tuple[list[LabeledSentence], list[RowIssue]]:
    """Parse every row, collecting issues instead of stopping at the first.

    Returns the rows that validated plus a list of per-row issues (header
    problems are reported as line 1).
    """
    p = Path(path)
    sentences: list[LabeledSentence] = []
    issues: list[RowIssue] = []
    seen_ids: dict[str, int] = {}
    with p.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            issues.append(RowIssue(1, None, CorpusParseError(f"{p}: empty file, expected header {','.join(_HEADER)}")))
            return sentences, issues
        if header != _HEADER:
            issues.append(
                RowIssue(1, None, CorpusParseError(f"{p}:1: bad header {header!r}, expected {_HEADER!r}"))
            )
            return sentences, issues
        for row in reader:
            line = reader.line_num
            if not row:
                continue
            if len(row) != len(_HEADER):
                issues.append(
                    RowIssue(line, None, CorpusParseError(f"{p}:{line}: expected {len(_HEADER)} fields, got {len(row)}"))
                )
                continue
            row_id, text, start_s, end_s, label_s = row
            text = _normalize_newlines(text)
            try:
                start, end = int(start_s), int(end_s)
            except ValueError:
                issues.append(
                    RowIssue(line, row_id, CorpusParseError(f"{p}:{line} (id {row_id}): non-integer span {start_s!r},{end_s!r}"))
                )
                continue
            try:
                label = FormatLabel.from_name(label_s)
            except ValueError as exc:
                issues.append(RowIssue(line, row_id, LabelError(f"{p}:{line} (id {row_id}): {exc}")))
                continue
            if not (0 <= start < end <= len(text)):
                issues.append(
                    RowIssue(line, row_id, SpanError(f"{p}:{line} (id {row_id}): span ({start},{end}) outside text of length {len(text)}"))
                )
                continue
            if not any(t.span == (start, end) for t in locate_numbers(text)):
                issues.append(
                    RowIssue(
                        line,
                        row_id,
                        SpanError(
                            f"{p}:{line} (id {row_id}): span ({start},{end}) = {text[start:end]!r} is not a located number token"
                        ),
                    )
                )
                continue
            if row_id in seen_ids:
                issues.append(
                    RowIssue(line, row_id, DuplicateIdError(f"{p}:{line}: duplicate id {row_id!r} (first seen line {seen_ids[row_id]})"))
                )
                continue
            seen_ids[row_id] = line
            sentences.append(LabeledSentence(id=row_id, text=text, span=(start, end), label=label))
    return sentences, issues


def load_corpus(path: str | Path) -> Corpus:
    """Load and validate a corpus file, raising on the first bad row."""
    sentences, issues = scan_corpus(path)
    if issues:
        raise issues[0].error
    return Corpus(sentences=tuple(sentences))


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("numctx").joinpath("data/corpus.csv")))


def load_bundled_corpus() -> Corpus:
    return load_corpus(bundled_corpus_path())


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    p = Path(path)
    with p.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(_HEADER)
        for s in corpus:
            writer.writerow([s.id, s.text, s.span[0], s.span[1], s.label.name])


def _shuffled(items: list[int], rng: random.Random) -> list[int]:
    # explicit Fisher-Yates so the permutation is pinned to the seed
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randrange(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def stratified_folds(corpus: Corpus, k: int, seed: int) -> list[tuple[int, ...]]:
    """Partition corpus indices into ``k`` class-stratified folds.

    Within each class present in the corpus, fold sizes differ by at most
    one; overall fold sizes also differ by at most one. A class present
    with fewer than ``k`` members raises StratificationError. Deterministic
    given (corpus order, k, seed).
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if len(corpus) == 0:
        raise StratificationError("corpus has no sentences to partition")
    by_class: dict[FormatLabel, list[int]] = {label: [] for label in LABELS}
    for index, sentence in enumerate(corpus):
        by_class[sentence.label].append(index)
    for label in LABELS:
        if 0 < len(by_class[label]) < k:
            raise StratificationError(
                f"class {label.name} has {len(by_class[label])} members, fewer than k={k}"
            )

    rng = random.Random(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    cursor = 0
    for label in LABELS:
        for index in _shuffled(by_class[label], rng):
            folds[cursor % k].append(index)
            cursor += 1
    return [tuple(sorted(fold)) for fold in folds]
