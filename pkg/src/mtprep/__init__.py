"""Morphological preprocessing and evaluation toolkit for machine
translation over agglutinative source languages.

Splitting: corpus-driven compound splitting plus longest-match suffix
separation, composable into the bl / ss / cs / cs+ss pipeline modes with a
reversible marker.  Scoring: corpus BLEU, NIST, and TER.  Alignment: a
small expectation-maximization lexical aligner for before/after
comparisons.
"""

from .aligner import (
    NULL_TOKEN,
    F1Score,
    TranslationTable,
    align_corpus,
    alignment_f1,
    corpus_alignment_f1,
    format_alignment,
    parse_alignment,
    train_em,
    viterbi_align,
)
from .compounds import (
    DEFAULT_MARGIN,
    CompoundSuffixSet,
    apply_compound_splitting,
    induce_compound_suffixes,
    load_compound_suffixes,
    save_compound_suffixes,
    split_compound,
)
from .corpus import (
    Corpus,
    Sentence,
    build_vocabulary,
    parse_token_corpus,
    read_token_corpus,
    write_token_corpus,
)
from .markers import join_marked, mark_pieces
from .metrics import (
    BleuScore,
    EvalReport,
    NistScore,
    SentenceTer,
    TerScore,
    bleu,
    edit_distance,
    evaluate,
    nist,
    sentence_bleu,
    sentence_ter,
    ter,
)
from .pipeline import Mode, PipelineConfig, preprocess, reconstruct, token_pieces
from .suffixes import (
    Split,
    SuffixList,
    apply_suffix_separation,
    load_suffix_list,
    save_suffix_list,
    separate_suffix,
)
from .synth import SyntheticBenchmark, alignment_improvement, build_benchmark

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Sentence",
    "parse_token_corpus",
    "read_token_corpus",
    "write_token_corpus",
    "build_vocabulary",
    "SuffixList",
    "Split",
    "separate_suffix",
    "apply_suffix_separation",
    "load_suffix_list",
    "save_suffix_list",
    "CompoundSuffixSet",
    "DEFAULT_MARGIN",
    "induce_compound_suffixes",
    "split_compound",
    "apply_compound_splitting",
    "load_compound_suffixes",
    "save_compound_suffixes",
    "Mode",
    "PipelineConfig",
    "preprocess",
    "reconstruct",
    "token_pieces",
    "mark_pieces",
    "join_marked",
    "BleuScore",
    "NistScore",
    "TerScore",
    "SentenceTer",
    "EvalReport",
    "bleu",
    "sentence_bleu",
    "nist",
    "ter",
    "sentence_ter",
    "edit_distance",
    "evaluate",
    "TranslationTable",
    "F1Score",
    "NULL_TOKEN",
    "train_em",
    "viterbi_align",
    "align_corpus",
    "alignment_f1",
    "corpus_alignment_f1",
    "format_alignment",
    "parse_alignment",
    "SyntheticBenchmark",
    "build_benchmark",
    "alignment_improvement",
    "__version__",
]
