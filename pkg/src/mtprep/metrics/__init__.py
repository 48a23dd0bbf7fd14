"""System-comparison metrics: BLEU, NIST, TER, and a combined report."""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..corpus import Corpus
from .bleu import BleuScore, bleu, sentence_bleu
from .nist import NistScore, nist
from .ter import SentenceTer, TerScore, edit_distance, sentence_ter, ter

__all__ = [
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
]

TSV_HEADER = "BLEU\tNIST\tTER"


@dataclass(frozen=True)
class EvalReport:
    """All three headline scores plus their components.

    bleu is in [0,1] and ter is a ratio (it can exceed 1); the percent
    forms appear in the serializations since scores are conventionally
    quoted scaled by 100.  nist has no percent form.
    """

    bleu: float
    nist: float
    ter: float
    bleu_detail: BleuScore
    nist_detail: NistScore
    ter_detail: TerScore

    def tsv_row(self) -> str:
        """Score row ordered BLEU, NIST, TER; BLEU and TER scaled by 100."""
        return f"{100.0 * self.bleu:.2f}\t{self.nist:.3f}\t{100.0 * self.ter:.2f}"

    def to_dict(self) -> dict:
        return {
            "bleu": self.bleu,
            "bleu_percent": 100.0 * self.bleu,
            "nist": self.nist,
            "ter": self.ter,
            "ter_percent": 100.0 * self.ter,
            "components": {
                "bleu": {
                    "precisions": list(self.bleu_detail.precisions),
                    "matches": list(self.bleu_detail.matches),
                    "totals": list(self.bleu_detail.totals),
                    "brevity_penalty": self.bleu_detail.brevity_penalty,
                    "hyp_length": self.bleu_detail.hyp_length,
                    "ref_length": self.bleu_detail.ref_length,
                },
                "nist": {
                    "per_order": list(self.nist_detail.per_order),
                    "brevity": self.nist_detail.brevity,
                },
                "ter": {
                    "edits": self.ter_detail.total_edits,
                    "shifts": self.ter_detail.total_shifts,
                    "ref_length": self.ter_detail.ref_length,
                },
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def evaluate(hyps: Corpus, refs: Corpus, threads: int | None = None) -> EvalReport:
    """Run all three metrics on one hypothesis/reference corpus pair.

    threads only affects the TER shift search (the expensive part); the
    scores are identical either way.
    """
    b = bleu(hyps, refs)
    n = nist(hyps, refs)
    t = ter(hyps, refs, threads=threads)
    return EvalReport(
        bleu=b.score, nist=n.score, ter=t.score,
        bleu_detail=b, nist_detail=n, ter_detail=t,
    )
