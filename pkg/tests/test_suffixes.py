"""Suffix lists and longest-match suffix separation."""

import pytest
from hypothesis import given, strategies as st

from mtprep.suffixes import (
    Split,
    SuffixList,
    apply_suffix_separation,
    load_suffix_list,
    save_suffix_list,
    separate_suffix,
)

from oracles import longest_suffix_oracle

word_st = st.text(alphabet="abcdef", min_size=1, max_size=12)
suffixes_st = st.lists(st.text(alphabet="abcdef", min_size=1, max_size=5), max_size=8)


def test_list_sorted_longest_first_then_lexicographic():
    sl = SuffixList(["ii", "aaMnii", "ne", "aa"])
    assert list(sl) == ["aaMnii", "aa", "ii", "ne"]


def test_list_deduplicates():
    sl = SuffixList(["aa", "aa", "ii"])
    assert len(sl) == 2


def test_list_rejects_empty_suffix():
    with pytest.raises(ValueError):
        SuffixList(["aa", ""])


def test_membership():
    sl = SuffixList(["aa"])
    assert "aa" in sl and "bb" not in sl


def test_separation_worked_example():
    sl = SuffixList(["aaMnii", "nii", "ii"])
    assert separate_suffix("mahinyaaMnii", sl) == Split("mahiny", "aaMnii")


def test_separation_requires_nonempty_stem():
    # the whole word is never treated as its own suffix
    sl = SuffixList(["aaMnii"])
    assert separate_suffix("aaMnii", sl) == Split("aaMnii", None)


def test_separation_prefers_longest_listed_suffix():
    sl = SuffixList(["ii", "iila"])
    assert separate_suffix("jarmaniitiila", sl) == Split("jarmaniit", "iila")


def test_separation_single_split_only():
    # one split per word: the stem is not re-examined
    sl = SuffixList(["aa", "nii"])
    assert separate_suffix("maanii", sl).pieces() == ["maa", "nii"]


def test_separation_no_match():
    sl = SuffixList(["xyz"])
    assert separate_suffix("word", sl) == Split("word", None)


def test_separation_rejects_empty_word():
    with pytest.raises(ValueError):
        separate_suffix("", SuffixList(["aa"]))


def test_pieces_shape():
    assert Split("a", "b").pieces() == ["a", "b"]
    assert Split("a", None).pieces() == ["a"]


def test_apply_to_corpus():
    sl = SuffixList(["aaMnii"])
    out = apply_suffix_separation([["mahinyaaMnii", "dara"], []], sl)
    assert out == [["mahiny", "aaMnii", "dara"], []]


def test_apply_with_marker():
    sl = SuffixList(["aaMnii"])
    out = apply_suffix_separation([["mahinyaaMnii"]], sl, marker="@@")
    assert out == [["mahiny@@", "aaMnii"]]


def test_load_skips_comments_and_blanks(tmp_path):
    path = tmp_path / "suf.txt"
    path.write_text("# comment\n\naaMnii\nii\n", encoding="utf-8")
    assert list(load_suffix_list(path)) == ["aaMnii", "ii"]


def test_load_empty_file_warns(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing\n", encoding="utf-8")
    with pytest.warns(UserWarning):
        sl = load_suffix_list(path)
    assert len(sl) == 0


def test_save_load_round_trip(tmp_path):
    sl = SuffixList(["ii", "aaMnii", "ne"])
    path = tmp_path / "suf.txt"
    save_suffix_list(sl, path)
    assert list(load_suffix_list(path)) == list(sl)


@given(word_st, suffixes_st)
def test_separation_matches_exhaustive_scan(word, suffixes):
    sl = SuffixList(suffixes)
    got = separate_suffix(word, sl)
    stem, suffix = longest_suffix_oracle(word, suffixes)
    # tie on length cannot happen: equal-length suffix matches of one word
    # are equal strings, so comparing against max-by-len is enough
    assert (got.stem, got.suffix) == (stem, suffix)


@given(word_st, suffixes_st)
def test_separation_concatenates_to_word(word, suffixes):
    assert "".join(separate_suffix(word, SuffixList(suffixes)).pieces()) == word
