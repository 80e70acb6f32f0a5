import pytest
from hypothesis import given, strategies as st

from charvar.words import (
    DegreeVector,
    FreeWord,
    WordError,
    concat,
    cyclic_min,
    degree,
    free_reduce,
    invert,
    parse_word,
    to_letters,
)


def w(letters, rank=4):
    return FreeWord(tuple(letters), rank)


letters_st = st.lists(
    st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0), max_size=12
)
positive_letters_st = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=12)


class TestParse:
    def test_notebook_syntax(self):
        assert parse_word("Word[1,2,-3,1]", 3).letters == (1, 2, -3, 1)

    def test_letter_syntax(self):
        assert parse_word("aabbaaBaB", 2).letters == (1, 1, 2, 2, 1, 1, -2, 1, -2)

    def test_empty(self):
        assert parse_word("", 2).letters == ()

    def test_bracket_syntax_whitespace(self):
        assert parse_word("  [ 1 , 2 , -3 ]  ", 3).letters == (1, 2, -3)

    def test_no_reduction_applied(self):
        assert parse_word("[1,-1]", 1).letters == (1, -1)

    def test_unknown_character(self):
        with pytest.raises(WordError):
            parse_word("ab1", 2)

    def test_index_zero(self):
        with pytest.raises(WordError):
            parse_word("[1,0,2]", 2)

    def test_index_exceeds_rank(self):
        with pytest.raises(WordError):
            parse_word("abc", 2)
        with pytest.raises(WordError):
            parse_word("[3]", 2)

    def test_malformed_brackets(self):
        with pytest.raises(WordError):
            parse_word("[1,2", 2)

    @given(letters_st)
    def test_roundtrip_letter_printer(self, letters):
        word = free_reduce(w(letters))
        assert parse_word(to_letters(word), 4) == word


class TestInvert:
    def test_examples(self):
        assert invert(w([1, 2])).letters == (-2, -1)
        assert invert(w([])).letters == ()
        assert invert(w([1, -3, 2])).letters == (-2, 3, -1)

    @given(letters_st)
    def test_involution(self, letters):
        assert invert(invert(w(letters))) == w(letters)


class TestFreeReduce:
    def test_examples(self):
        assert free_reduce(w([1, -1])).letters == ()
        assert free_reduce(w([1, 2, -2, -1, 3])).letters == (3,)
        assert free_reduce(w([1, 2, 3])).letters == (1, 2, 3)

    @given(letters_st)
    def test_idempotent_and_shorter(self, letters):
        word = w(letters)
        once = free_reduce(word)
        assert free_reduce(once) == once
        assert len(once) <= len(word)
        assert once.is_reduced()


class TestConcat:
    def test_examples(self):
        assert concat(w([1, 2], 2), w([-2], 2)).letters == (1,)
        assert concat(w([], 3), w([3], 3)).letters == (3,)
        assert concat(w([1], 2), w([1], 2)).letters == (1, 1)

    def test_rank_mismatch(self):
        with pytest.raises(WordError):
            concat(w([1], 2), w([1], 3))

    def test_concat_inverse_is_identity(self):
        word = w([1, 2, -3, 1])
        assert concat(word, invert(word)).letters == ()


class TestCyclicMin:
    def test_examples(self):
        assert cyclic_min(w([2, 1])).letters == (1, 2)
        assert cyclic_min(w([3, 1, 2])).letters == (1, 2, 3)
        assert cyclic_min(w([1, 3, 2])).letters == (1, 3, 2)

    def test_negative_letter_rejected(self):
        with pytest.raises(WordError):
            cyclic_min(w([1, -2]))

    @given(positive_letters_st, st.integers(min_value=0, max_value=11))
    def test_rotation_invariance(self, letters, k):
        word = w(letters)
        k = k % len(letters)
        rotated = w(letters[k:] + letters[:k])
        assert cyclic_min(rotated) == cyclic_min(word)


class TestDegree:
    def test_examples(self):
        d = degree(w([1, 2, -1, -2], 2))
        assert d.entries == (0, 0) and d.mod2 == (0, 0)
        d = degree(w([1, 1, 2], 2))
        assert d.entries == (2, 1) and d.mod2 == (0, 1)
        d = degree(w([-3], 3))
        assert d.entries == (0, 0, -1) and d.mod2 == (0, 0, 1)

    def test_mod2_consistency_enforced(self):
        with pytest.raises(ValueError):
            DegreeVector((1, 2), (0, 0))

    @given(letters_st, letters_st)
    def test_additivity(self, lu, lv):
        u, v = w(lu), w(lv)
        total = degree(concat(u, v))
        parts = degree(u) + degree(v)
        assert total.entries == parts.entries
