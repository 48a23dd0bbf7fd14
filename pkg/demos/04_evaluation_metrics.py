"""Score a toy hypothesis three ways and unpack what each metric saw.

Run:  python demos/04_evaluation_metrics.py
"""

from mtprep.metrics import TSV_HEADER, evaluate

hyps = [
    ["the", "cat", "sat", "on", "the", "mat"],
    ["a", "dog", "barked", "loudly"],
]
refs = [
    ["the", "cat", "sat", "on", "a", "mat"],
    ["the", "dog", "barked", "very", "loudly"],
]

report = evaluate(hyps, refs)

print(TSV_HEADER)
print(report.tsv_row())
print()

b = report.bleu_detail
print("BLEU pieces:")
for n, (m, t, p) in enumerate(zip(b.matches, b.totals, b.precisions), start=1):
    print(f"  {n}-gram: {m}/{t} clipped matches  (precision {p:.3f})")
print(f"  brevity penalty {b.brevity_penalty:.4f} "
      f"(hyp {b.hyp_length} words vs ref {b.ref_length})")
print()

n = report.nist_detail
print("NIST pieces (information gain per order, rarer matches weigh more):")
for order, value in enumerate(n.per_order, start=1):
    print(f"  order {order}: {value:.4f}")
print(f"  brevity factor {n.brevity:.4f}")
print()

t = report.ter_detail
print("TER pieces:")
for k, sent in enumerate(t.sentences, start=1):
    print(
        f"  sentence {k}: {sent.shifts} shifts + {sent.edits_after_shifts} edits"
        f" over {sent.ref_length} reference words"
    )
print(f"  corpus rate: {t.total_edits}/{t.ref_length} = {t.score:.4f}")
print()
print("same text both sides gives the fixed points: BLEU 1, TER 0")
identity = evaluate(refs, refs)
print(f"  check: BLEU {identity.bleu:.1f}, TER {identity.ter:.1f}")
