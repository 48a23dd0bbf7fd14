"""Stem/suffix splitting against a curated suffix inventory.

A word is split at most once, on the longest inventory entry that is a
strict suffix of the word (the stem must keep at least one character).
The inventory itself is a hand-written list of source-language suffixes
that correspond to free-standing postpositions in the target language.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .corpus import Corpus
from .markers import check_marker, mark_pieces


@dataclass(frozen=True)
class SuffixList:
    """Suffix inventory ordered longest first (ties lexicographic).

    The ordering is what makes a linear scan in separate_suffix return the
    longest match, so it is normalized on construction and deduplicated.
    """

    suffixes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        for s in self.suffixes:
            if not s:
                raise ValueError("suffix list entries must be non-empty")
        ordered = tuple(sorted(set(self.suffixes), key=lambda s: (-len(s), s)))
        object.__setattr__(self, "suffixes", ordered)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "SuffixList":
        return cls(tuple(words))

    def __iter__(self) -> Iterator[str]:
        return iter(self.suffixes)

    def __len__(self) -> int:
        return len(self.suffixes)

    def __contains__(self, suffix: object) -> bool:
        return suffix in self.suffixes


@dataclass(frozen=True)
class Split:
    """One word split into a stem and at most one suffix.

    An absent suffix means the word was left whole.
    """

    stem: str
    suffix: str | None = None

    def pieces(self) -> list[str]:
        if self.suffix is None:
            return [self.stem]
        return [self.stem, self.suffix]


def load_suffix_list(path: str | Path) -> SuffixList:
    """Load a one-suffix-per-line UTF-8 file.

    Blank lines and lines starting with '#' are ignored; duplicates are
    dropped.  An empty result is legal but almost certainly a mistake, so
    it warns.
    """
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(line)
    if not entries:
        warnings.warn(f"suffix list {path} contains no suffixes", stacklevel=2)
    return SuffixList(tuple(entries))


def save_suffix_list(suffixes: SuffixList, path: str | Path) -> None:
    """Write one suffix per line in the list's longest-first order."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for suffix in suffixes:
            fh.write(suffix + "\n")


def separate_suffix(word: str, suffixes: SuffixList) -> Split:
    """Split off the longest listed suffix, if any.

    The match must be strict: the word has to be longer than the suffix so
    the stem stays non-empty.  Words with no qualifying suffix come back
    whole.
    """
    if not word:
        raise ValueError("cannot split an empty word")
    for suffix in suffixes:
        if len(word) > len(suffix) and word.endswith(suffix):
            return Split(word[: -len(suffix)], suffix)
    return Split(word)


def apply_suffix_separation(
    corpus: Corpus, suffixes: SuffixList, marker: str | None = None
) -> Corpus:
    """Split every token of the corpus, keeping the sentence structure.

    With a marker, each stem that was split is emitted as stem+marker so
    the original line can be reconstructed.
    """
    check_marker(marker)
    out = []
    for sentence in corpus:
        tokens: list[str] = []
        for word in sentence:
            tokens.extend(mark_pieces(separate_suffix(word, suffixes).pieces(), marker))
        out.append(tokens)
    return out
