"""Train the EM aligner on the bundled corpus and watch splitting help it.

The fused source packs "from the dentist" into one token, so the aligner
must cram several target words onto it.  After compound splitting and
suffix separation each target word can claim its own source piece.

Run:  python demos/05_em_alignment.py
"""

from mtprep.aligner import format_alignment, train_em, viterbi_align
from mtprep.demo import load_demo_fixtures, one_to_one_links
from mtprep.pipeline import Mode, PipelineConfig, preprocess

suffixes, compounds, src, tgt = load_demo_fixtures()
config = PipelineConfig(mode=Mode.CS_SS, suffix_list=suffixes, compound_set=compounds)
split_src = preprocess(src, config)

print(f"parallel corpus: {len(src)} sentence pairs")
print()

for label, corpus in [("fused", src), ("split", split_src)]:
    table = train_em(corpus, tgt, iterations=5)
    links = viterbi_align(corpus[0], tgt[0], table)
    print(f"{label} source, first sentence:")
    print("  src:", " ".join(corpus[0]))
    print("  tgt:", " ".join(tgt[0]))
    print("  links (src-tgt):", format_alignment(links))
    ones = one_to_one_links(links)
    print(f"  one-to-one links: {ones} of {len(tgt[0])} target words")
    print()

print("log-likelihood trajectory is non-decreasing while EM trains:")
lls = train_em(split_src, tgt, iterations=5).log_likelihoods
print(" ", " -> ".join(f"{ll:.2f}" for ll in lls))
