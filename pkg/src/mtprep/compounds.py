"""Compound-word splitting with a corpus-induced constituent inventory.

Induction scans a monolingual vocabulary: a word joins the compound-suffix
inventory when some other, sufficiently longer vocabulary word ends with it
(the length margin keeps short accidental tails out).  Splitting then
recursively strips inventory members off the right edge of a word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterator, Mapping

from .corpus import Corpus
from .markers import check_marker, mark_pieces

DEFAULT_MARGIN = 5


@dataclass(frozen=True)
class CompoundSuffixSet:
    """Induced constituent inventory.

    counts maps each member to the number of distinct vocabulary words it
    was observed trailing during induction (its provenance).
    """

    counts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for member, count in self.counts.items():
            if not member:
                raise ValueError("compound suffixes must be non-empty")
            if count < 1:
                raise ValueError(f"provenance count for {member!r} must be >= 1")

    @cached_property
    def ordered(self) -> tuple[str, ...]:
        """Members sorted longest first so a scan finds the longest match."""
        return tuple(sorted(self.counts, key=lambda s: (-len(s), s)))

    @property
    def suffixes(self) -> frozenset[str]:
        return frozenset(self.counts)

    def __contains__(self, member: object) -> bool:
        return member in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ordered)


def induce_compound_suffixes(
    vocab: Mapping[str, int], margin: int = DEFAULT_MARGIN, min_count: int = 1
) -> CompoundSuffixSet:
    """Collect vocabulary words that appear as long-margin suffixes of other
    vocabulary words.

    A word v is kept when some other word w satisfies w.endswith(v) and
    len(w) > len(v) + margin; provenance counts the distinct w per v.
    min_count filters rare members (1 keeps everything observed).
    """
    if margin < 0:
        raise ValueError("margin must be >= 0")
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    words = set(vocab)
    counts: dict[str, int] = {}
    for w in words:
        # Tails of length L satisfy len(w) > L + margin, i.e. L <= len(w)-margin-1,
        # and are strictly shorter than w, so w itself never qualifies.
        longest = len(w) - margin - 1
        for length in range(1, longest + 1):
            tail = w[-length:]
            if tail in words:
                counts[tail] = counts.get(tail, 0) + 1
    if min_count > 1:
        counts = {s: c for s, c in counts.items() if c >= min_count}
    return CompoundSuffixSet(counts)


def split_compound(
    word: str, compound_suffixes: CompoundSuffixSet, margin: int = DEFAULT_MARGIN
) -> list[str]:
    """Recursively strip inventory members off the right edge of the word.

    A strip needs residue.endswith(member), a strictly shorter member than
    the current residue (constituents stay non-empty), and the original
    word longer than member length + margin.  Returned constituents are in
    surface order and always concatenate back to the input.
    """
    if not word:
        raise ValueError("cannot split an empty word")
    stripped: list[str] = []
    residue = word
    while True:
        match = None
        for member in compound_suffixes.ordered:
            if (
                len(residue) > len(member)
                and len(word) > len(member) + margin
                and residue.endswith(member)
            ):
                match = member
                break
        if match is None:
            break
        stripped.append(match)
        residue = residue[: -len(match)]
    stripped.append(residue)
    stripped.reverse()
    return stripped


def apply_compound_splitting(
    corpus: Corpus,
    compound_suffixes: CompoundSuffixSet,
    marker: str | None = None,
    margin: int = DEFAULT_MARGIN,
) -> Corpus:
    """Split every token of the corpus, keeping the sentence structure."""
    check_marker(marker)
    out = []
    for sentence in corpus:
        tokens: list[str] = []
        for word in sentence:
            tokens.extend(
                mark_pieces(split_compound(word, compound_suffixes, margin), marker)
            )
        out.append(tokens)
    return out


def save_compound_suffixes(
    compound_suffixes: CompoundSuffixSet, path: str | Path
) -> None:
    """Write one "suffix<TAB>count" line per member, sorted for stable diffs."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for member in sorted(compound_suffixes.counts):
            fh.write(f"{member}\t{compound_suffixes.counts[member]}\n")


def load_compound_suffixes(path: str | Path) -> CompoundSuffixSet:
    """Read the tab-separated format written by save_compound_suffixes."""
    counts: dict[str, int] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'suffix<TAB>count'")
        member, raw_count = parts
        try:
            count = int(raw_count)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad count {raw_count!r}") from None
        if not member or count < 1:
            raise ValueError(f"{path}:{lineno}: bad entry {line!r}")
        counts[member] = count
    return CompoundSuffixSet(counts)
