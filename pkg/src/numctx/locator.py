"""Tokenization and number location.

Numbers are maximal ASCII digit runs. Punctuation out of ``. , : - /`` is
absorbed into a number only when flanked by digits on both sides, so a
sentence-final full stop never joins the number before it. An immediately
preceding ``+`` or ``RM`` (glued or space-separated) and an immediately
following ``%`` are absorbed as attached symbols.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum

_ABSORBABLE = frozenset(".,:-/")
_STRIP = ".,;!?()\"'"
_WORD_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class WordToken:
    surface: str
    span: tuple[int, int]
    lowered: str


@dataclass(frozen=True)
class NumberToken:
    """A located number with its attached symbols.

    ``digit_groups`` interleaved with ``separators`` reconstructs the raw
    text minus the attached prefix/suffix symbols.
    """

    raw: str
    span: tuple[int, int]
    digit_groups: tuple[str, ...]
    separators: tuple[str, ...]
    prefix_symbol: str | None = None
    suffix_symbol: str | None = None

    @property
    def internal_punct(self) -> frozenset[str]:
        return frozenset(self.separators)

    def body(self) -> str:
        """The digit groups joined by their separators (symbols stripped)."""
        parts = [self.digit_groups[0]]
        for sep, grp in zip(self.separators, self.digit_groups[1:]):
            parts.append(sep)
            parts.append(grp)
        return "".join(parts)


class ShapeKind(IntEnum):
    PlainInt = 0
    Decimal = 1
    SlashDate = 2
    HyphenGroups = 3
    ColonTime = 4
    DotTime = 5
    SignedPhone = 6
    CurrencyPrefixed = 7
    PercentSuffixed = 8


SHAPE_KINDS: tuple[ShapeKind, ...] = tuple(ShapeKind)


@dataclass(frozen=True)
class NumberShape:
    kind: ShapeKind
    digit_count: int
    group_lengths: tuple[int, ...]


def tokenize(text: str) -> list[WordToken]:
    """Split on whitespace and detach leading/trailing sentence punctuation.

    Punctuation inside a chunk (e.g. the dot of ``2.50`` or the hyphen of
    ``kata-kata``) is left in place. Chunks that are punctuation only are
    dropped.
    """
    tokens: list[WordToken] = []
    for m in _WORD_RE.finditer(text):
        start, end = m.start(), m.end()
        while start < end and text[start] in _STRIP:
            start += 1
        while end > start and text[end - 1] in _STRIP:
            end -= 1
        if start == end:
            continue
        surface = text[start:end]
        tokens.append(WordToken(surface=surface, span=(start, end), lowered=surface.lower()))
    return tokens


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _boundary_before(text: str, pos: int) -> bool:
    """True when the character before ``pos`` does not glue into a word."""
    return pos == 0 or not text[pos - 1].isalnum()


def locate_numbers(text: str) -> list[NumberToken]:
    """Return every number token in ``text``, ordered by start offset."""
    found: list[NumberToken] = []
    i, n = 0, len(text)
    while i < n:
        if not _is_digit(text[i]):
            i += 1
            continue
        body_start = i
        groups: list[str] = []
        seps: list[str] = []
        while True:
            run_start = i
            while i < n and _is_digit(text[i]):
                i += 1
            groups.append(text[run_start:i])
            if i < n - 1 and text[i] in _ABSORBABLE and _is_digit(text[i + 1]):
                seps.append(text[i])
                i += 1
                continue
            break
        body_end = i

        prefix: str | None = None
        start = body_start
        if body_start >= 1 and text[body_start - 1] == "+" and _boundary_before(text, body_start - 1):
            prefix, start = "+", body_start - 1
        elif (
            body_start >= 3
            and text[body_start - 3 : body_start] == "RM "
            and _boundary_before(text, body_start - 3)
        ):
            prefix, start = "RM", body_start - 3
        elif (
            body_start >= 2
            and text[body_start - 2 : body_start] == "RM"
            and _boundary_before(text, body_start - 2)
        ):
            prefix, start = "RM", body_start - 2

        suffix: str | None = None
        end = body_end
        if end < n and text[end] == "%":
            suffix, end = "%", end + 1

        found.append(
            NumberToken(
                raw=text[start:end],
                span=(start, end),
                digit_groups=tuple(groups),
                separators=tuple(seps),
                prefix_symbol=prefix,
                suffix_symbol=suffix,
            )
        )
    return found


def shape_of(token: NumberToken) -> NumberShape:
    """Classify a number token's surface shape.

    Precedence: SlashDate, ColonTime, SignedPhone, CurrencyPrefixed,
    PercentSuffixed, HyphenGroups, then the single-dot rule (DotTime when
    the left group has 1-2 digits and the right exactly 2, Decimal for any
    other single dot), and PlainInt for everything else.
    """
    seps = token.separators
    groups = token.digit_groups
    lengths = tuple(len(g) for g in groups)
    digit_count = sum(lengths)

    if len(groups) == 3 and seps == ("/", "/"):
        kind = ShapeKind.SlashDate
    elif ":" in seps:
        kind = ShapeKind.ColonTime
    elif token.prefix_symbol == "+":
        kind = ShapeKind.SignedPhone
    elif token.prefix_symbol == "RM":
        kind = ShapeKind.CurrencyPrefixed
    elif token.suffix_symbol == "%":
        kind = ShapeKind.PercentSuffixed
    elif "-" in seps:
        kind = ShapeKind.HyphenGroups
    elif seps == (".",):
        if lengths[0] <= 2 and lengths[1] == 2:
            kind = ShapeKind.DotTime
        else:
            kind = ShapeKind.Decimal
    else:
        kind = ShapeKind.PlainInt

    return NumberShape(kind=kind, digit_count=digit_count, group_lengths=lengths)
