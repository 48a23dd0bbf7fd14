"""Compound suffix induction and recursive compound splitting."""

import pytest
from hypothesis import given, settings, strategies as st

from mtprep.compounds import (
    CompoundSuffixSet,
    apply_compound_splitting,
    induce_compound_suffixes,
    load_compound_suffixes,
    save_compound_suffixes,
    split_compound,
)

from oracles import induce_oracle

vocab_st = st.lists(st.text(alphabet="ab", min_size=1, max_size=14), max_size=40)


# --- induction ---------------------------------------------------------------

def test_induction_worked_example():
    vocab = {
        "kaDuuna": 1,
        "daMtatajGYaaMkaDuuna": 1,
        "hRdayatajGYaaMkaDuuna": 1,
        "DaakTarakaDuuna": 1,
    }
    cset = induce_compound_suffixes(vocab)
    # every compound is >= 8 code points longer than kaDuuna, well past the margin
    assert cset.counts == {"kaDuuna": 3}


def test_induction_respects_margin():
    # "abcdefgh" is exactly margin+1 longer than "gh": 8 > 2 + 5 holds,
    # while "fgh" fails 8 > 3 + 5
    cset = induce_compound_suffixes(["gh", "fgh", "abcdefgh"], margin=5)
    assert cset.counts == {"gh": 1}


def test_induction_min_count_filter():
    vocab = ["na", "aaaaaana", "bbbbbbna", "ta", "ccccccta"]
    assert induce_compound_suffixes(vocab, min_count=2).counts == {"na": 2}


def test_induction_counts_types_not_tokens():
    # vocabulary multiplicity is irrelevant; each supporting type counts once
    vocab = {"na": 9, "aaaaaana": 7}
    assert induce_compound_suffixes(vocab).counts == {"na": 1}


def test_induction_empty_vocab():
    assert induce_compound_suffixes([]).counts == {}


def test_induction_rejects_negative_margin():
    with pytest.raises(ValueError):
        induce_compound_suffixes(["a"], margin=-1)


@settings(max_examples=60)
@given(vocab_st, st.integers(min_value=0, max_value=6))
def test_induction_matches_double_loop(vocab, margin):
    got = induce_compound_suffixes(vocab, margin=margin)
    assert got.counts == induce_oracle(vocab, margin=margin)


# --- splitting ---------------------------------------------------------------

def test_split_worked_example():
    cset = CompoundSuffixSet({"kaDuuna": 3, "tajGYaaM": 2})
    assert split_compound("daMtatajGYaaMkaDuuna", cset) == [
        "daMta",
        "tajGYaaM",
        "kaDuuna",
    ]


def test_split_strips_right_to_left_longest_first():
    cset = CompoundSuffixSet({"cc": 1, "bcc": 1})
    # longest listed member wins at each step
    assert split_compound("aaaaaabcc", cset) == ["aaaaaa", "bcc"]


def test_split_leaves_short_words_alone():
    cset = CompoundSuffixSet({"na": 1})
    # word itself must clear the margin before any stripping happens
    assert split_compound("seena", cset) == ["seena"]


def test_split_never_empties_residue():
    cset = CompoundSuffixSet({"aaaaaa": 1})
    assert split_compound("aaaaaa", cset) == ["aaaaaa"]


def test_split_concatenation_identity():
    cset = CompoundSuffixSet({"kaDuuna": 3, "tajGYaaM": 2})
    for word in ["daMtatajGYaaMkaDuuna", "dara", "kaDuuna", "sarakaarakaDuuna"]:
        assert "".join(split_compound(word, cset)) == word


def test_apply_with_marker():
    cset = CompoundSuffixSet({"kaDuuna": 3})
    out = apply_compound_splitting([["sarakaarakaDuuna", "dara"]], cset, marker="@@")
    assert out == [["sarakaara@@", "kaDuuna", "dara"]]


@settings(max_examples=60)
@given(vocab_st, st.text(alphabet="ab", min_size=1, max_size=20))
def test_split_pieces_concatenate_to_word(vocab, word):
    cset = induce_compound_suffixes(vocab)
    assert "".join(split_compound(word, cset)) == word


@settings(max_examples=60)
@given(vocab_st, st.text(alphabet="ab", min_size=1, max_size=20))
def test_split_pieces_all_nonempty(vocab, word):
    cset = induce_compound_suffixes(vocab)
    assert all(piece for piece in split_compound(word, cset))


# --- persistence -------------------------------------------------------------

def test_save_load_round_trip(tmp_path):
    cset = CompoundSuffixSet({"kaDuuna": 3, "na": 7})
    path = tmp_path / "comp.tsv"
    save_compound_suffixes(cset, path)
    assert load_compound_suffixes(path).counts == cset.counts


def test_load_reports_bad_line_number(tmp_path):
    path = tmp_path / "comp.tsv"
    path.write_text("kaDuuna\t3\nbroken line\n", encoding="utf-8")
    with pytest.raises(ValueError, match=":2:"):
        load_compound_suffixes(path)


def test_load_rejects_non_integer_count(tmp_path):
    path = tmp_path / "comp.tsv"
    path.write_text("kaDuuna\tmany\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_compound_suffixes(path)


def test_ordered_by_length_then_lexicographic():
    cset = CompoundSuffixSet({"na": 1, "ii": 1, "kaDuuna": 1})
    assert cset.ordered == ("kaDuuna", "ii", "na")
