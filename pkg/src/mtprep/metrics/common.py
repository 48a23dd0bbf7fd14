"""Shared pieces for the corpus-level metrics."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

Ngram = tuple[str, ...]


def ngram_counts(tokens: Sequence[str], n: int) -> Counter[Ngram]:
    """Multiset of the order-n n-grams of a token sequence."""
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def validate_corpora(hyps: Sequence[Sequence[str]], refs: Sequence[Sequence[str]]) -> None:
    """Common preconditions: parallel, non-empty, no empty reference."""
    if len(hyps) != len(refs):
        raise ValueError(
            f"hypothesis corpus has {len(hyps)} sentences, reference has {len(refs)}"
        )
    if not hyps:
        raise ValueError("cannot score an empty corpus")
    for k, ref in enumerate(refs):
        if not ref:
            raise ValueError(f"reference sentence {k + 1} is empty")
