import pytest
from hypothesis import given, strategies as st

from numctx.locator import (
    NumberToken,
    ShapeKind,
    locate_numbers,
    shape_of,
    tokenize,
)


class TestTokenize:
    def test_court_sentence(self):
        tokens = tokenize("Mahkamah menetapkan 21 Januari ini untuk sebutan semula kes")
        assert [t.lowered for t in tokens] == [
            "mahkamah", "menetapkan", "21", "januari", "ini", "untuk", "sebutan", "semula", "kes",
        ]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_detaches_final_full_stop(self):
        # hand tokenization: trailing '.' leaves the word, number dot stays
        tokens = tokenize("harga RM 2.50.")
        assert [t.surface for t in tokens] == ["harga", "RM", "2.50"]

    def test_detaches_leading_and_trailing_punctuation(self):
        tokens = tokenize('(dia berkata "ya!") ...')
        assert [t.surface for t in tokens] == ["dia", "berkata", "ya"]

    def test_spans_match_source(self):
        text = "ayat, dengan 2.50 nombor."
        for token in tokenize(text):
            start, end = token.span
            assert text[start:end] == token.surface

    def test_word_internal_hyphen_kept(self):
        assert [t.surface for t in tokenize("kata-kata itu")] == ["kata-kata", "itu"]


class TestLocateNumbers:
    def test_currency_with_space(self):
        (token,) = locate_numbers("RM 2.50")
        assert token.prefix_symbol == "RM"
        assert token.digit_groups == ("2", "50")
        assert token.internal_punct == {"."}
        assert token.raw == "RM 2.50"

    def test_currency_glued(self):
        (token,) = locate_numbers("RM2")
        assert token.prefix_symbol == "RM"
        assert token.digit_groups == ("2",)

    def test_no_numbers(self):
        assert locate_numbers("tiada nombor di sini") == []

    def test_two_tokens_by_hand_scan(self):
        tokens = locate_numbers("hubungi 03-4012345 sebelum 5 petang")
        assert len(tokens) == 2
        assert tokens[0].raw == "03-4012345"
        assert tokens[0].digit_groups == ("03", "4012345")
        assert tokens[1].raw == "5"

    def test_sentence_final_dot_not_absorbed(self):
        (token,) = locate_numbers("nombor itu ialah 250.")
        assert token.raw == "250"

    def test_percent_suffix(self):
        (token,) = locate_numbers("naik 25% semalam")
        assert token.suffix_symbol == "%"
        assert token.raw == "25%"

    def test_plus_prefix_boundary(self):
        (token,) = locate_numbers("+60-12-345678")
        assert token.prefix_symbol == "+"
        # '+' between digits is arithmetic, not a phone prefix
        tokens = locate_numbers("3+4")
        assert [t.raw for t in tokens] == ["3", "4"]
        assert tokens[1].prefix_symbol is None

    def test_rm_needs_word_boundary(self):
        (token,) = locate_numbers("FIRM2 syarikat")
        assert token.prefix_symbol is None
        assert token.raw == "2"

    def test_ordered_by_start(self):
        spans = [t.span for t in locate_numbers("1 dan 2 dan 33 dan 4")]
        assert spans == sorted(spans)


class TestShapeOf:
    def parse(self, text):
        (token,) = locate_numbers(text)
        return token

    def test_hyphen_phone(self):
        shape = shape_of(self.parse("03-4012345"))
        assert shape.kind == ShapeKind.HyphenGroups
        assert shape.group_lengths == (2, 7)

    def test_colon_time(self):
        assert shape_of(self.parse("12:47")).kind == ShapeKind.ColonTime

    def test_plain_int(self):
        shape = shape_of(self.parse("1500"))
        assert shape.kind == ShapeKind.PlainInt
        assert shape.digit_count == 4

    @pytest.mark.parametrize(
        "text,kind",
        [
            ("21/01/2020", ShapeKind.SlashDate),
            ("+60-12-345678", ShapeKind.SignedPhone),
            ("RM 2.50", ShapeKind.CurrencyPrefixed),
            ("25%", ShapeKind.PercentSuffixed),
            ("2.50", ShapeKind.DotTime),
            ("12.30", ShapeKind.DotTime),
            ("2.5", ShapeKind.Decimal),
            ("123.45", ShapeKind.Decimal),
            ("12.345", ShapeKind.Decimal),
            ("1,000", ShapeKind.PlainInt),
            ("1/2", ShapeKind.PlainInt),
            ("2020-01", ShapeKind.HyphenGroups),
        ],
    )
    def test_precedence_table(self, text, kind):
        assert shape_of(self.parse(text)).kind == kind

    def test_signed_beats_hyphen(self):
        # '+' prefix wins over the hyphen rule for +xx-xx-xxxxxx patterns
        assert shape_of(self.parse("+60-12-345678")).kind == ShapeKind.SignedPhone

    def test_currency_beats_dot(self):
        assert shape_of(self.parse("RM 2.50")).kind == ShapeKind.CurrencyPrefixed


def _reconstruct(token: NumberToken) -> str:
    prefix_len = len(token.raw) - len(token.body()) - len(token.suffix_symbol or "")
    prefix_text = token.raw[:prefix_len]
    return prefix_text + token.body() + (token.suffix_symbol or "")


_TEXT_ALPHABET = st.sampled_from(list("ab 0123456789.,:-/%+RM"))


class TestProperties:
    @given(st.lists(_TEXT_ALPHABET, max_size=40).map("".join))
    def test_spans_disjoint_and_raw_matches(self, text):
        tokens = locate_numbers(text)
        previous_end = -1
        for token in tokens:
            start, end = token.span
            assert start >= previous_end
            assert text[start:end] == token.raw
            assert _reconstruct(token) == token.raw
            previous_end = end

    @given(st.lists(_TEXT_ALPHABET, max_size=40).map("".join))
    def test_idempotence(self, text):
        for token in locate_numbers(text):
            again = locate_numbers(token.raw)
            assert len(again) == 1
            assert again[0].digit_groups == token.digit_groups
            assert again[0].separators == token.separators
            assert again[0].prefix_symbol == token.prefix_symbol
            assert again[0].suffix_symbol == token.suffix_symbol
            assert shape_of(again[0]) == shape_of(token)

    @given(st.lists(_TEXT_ALPHABET, max_size=40).map("".join))
    def test_shape_groups_consistent(self, text):
        for token in locate_numbers(text):
            shape = shape_of(token)
            assert shape.group_lengths == tuple(len(g) for g in token.digit_groups)
            assert shape.digit_count == sum(shape.group_lengths)
