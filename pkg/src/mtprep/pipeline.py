"""Preprocessing pipeline: compose compound splitting and suffix separation.

Four modes mirror the submitted system configurations: bl (identity),
ss (suffix separation), cs (compound splitting), cs+ss (compound splitting
first, then suffix separation on every resulting constituent).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .compounds import DEFAULT_MARGIN, CompoundSuffixSet, split_compound
from .corpus import Corpus, Sentence, read_token_corpus
from .markers import check_marker, join_marked, mark_pieces
from .suffixes import SuffixList, separate_suffix

# Tokens carrying this POS tag are exempt from splitting when a tag file is
# supplied: proper nouns fragment badly and gain nothing from separation.
NNP_TAG = "NNP"


class Mode(Enum):
    BL = "bl"
    SS = "ss"
    CS = "cs"
    CS_SS = "cs+ss"


@dataclass(frozen=True)
class PipelineConfig:
    mode: Mode
    suffix_list: SuffixList | None = None
    compound_set: CompoundSuffixSet | None = None
    marker: str | None = None
    nnp_tags: str | Path | None = None
    margin: int = DEFAULT_MARGIN

    def __post_init__(self) -> None:
        check_marker(self.marker)
        if self.mode in (Mode.SS, Mode.CS_SS) and self.suffix_list is None:
            raise ValueError(f"mode {self.mode.value} requires a suffix list")
        if self.mode in (Mode.CS, Mode.CS_SS) and self.compound_set is None:
            raise ValueError(f"mode {self.mode.value} requires a compound suffix set")


def token_pieces(word: str, config: PipelineConfig) -> list[str]:
    """Decompose one token per the configured mode, pieces in surface order.

    The pieces always concatenate back to the word; markers are applied by
    the caller so the decomposition itself stays marker-free.
    """
    if config.mode is Mode.BL:
        return [word]
    if config.mode is Mode.SS:
        return separate_suffix(word, config.suffix_list).pieces()
    constituents = split_compound(word, config.compound_set, config.margin)
    if config.mode is Mode.CS:
        return constituents
    pieces: list[str] = []
    for constituent in constituents:
        pieces.extend(separate_suffix(constituent, config.suffix_list).pieces())
    return pieces


def _process_sentence(
    k: int, sentence: Sentence, tags: Sentence | None, config: PipelineConfig
) -> Sentence:
    tokens: list[str] = []
    for t, word in enumerate(sentence):
        if config.marker is not None and config.marker in word:
            raise ValueError(
                f"sentence {k + 1}: input token {word!r} contains "
                f"the marker {config.marker!r}"
            )
        if tags is not None and tags[t] == NNP_TAG:
            tokens.append(word)
            continue
        tokens.extend(mark_pieces(token_pieces(word, config), config.marker))
    return tokens


def preprocess(
    corpus: Corpus, config: PipelineConfig, threads: int | None = None
) -> Corpus:
    """Apply the configured splitting to every token of every sentence.

    Sentence count is always preserved.  When a marker is configured, any
    input token already containing it is rejected (round-tripping would be
    ambiguous otherwise).  When a tag file is configured, tokens tagged NNP
    pass through whole.  Sentences are independent, so threads > 1 fans
    them out while keeping the output order identical.
    """
    tags = None
    if config.nnp_tags is not None:
        tags = read_token_corpus(config.nnp_tags)
        if len(tags) != len(corpus):
            raise ValueError(
                f"tag file has {len(tags)} sentences, corpus has {len(corpus)}"
            )
        for k, (tag_sent, sentence) in enumerate(zip(tags, corpus)):
            if len(tag_sent) != len(sentence):
                raise ValueError(
                    f"sentence {k + 1}: {len(tag_sent)} tags "
                    f"for {len(sentence)} tokens"
                )
    jobs = (
        (k, sentence, tags[k] if tags is not None else None, config)
        for k, sentence in enumerate(corpus)
    )
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda job: _process_sentence(*job), jobs))
    return [_process_sentence(*job) for job in jobs]


def reconstruct(corpus: Corpus, marker: str = "@@") -> Corpus:
    """Undo a marked preprocessing run: join marker-bearing tokens onward.

    reconstruct(preprocess(x, config-with-marker), marker) == x.  A sentence
    ending in a marked token is malformed and raises.
    """
    if not marker:
        raise ValueError("marker must be a non-empty string")
    return [join_marked(sentence, marker) for sentence in corpus]
