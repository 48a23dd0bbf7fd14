"""The four pipeline modes side by side, with and without markers.

Run:  python demos/03_preprocessing_pipeline.py
"""

from mtprep.compounds import CompoundSuffixSet
from mtprep.pipeline import Mode, PipelineConfig, preprocess, reconstruct
from mtprep.suffixes import SuffixList

suffixes = SuffixList(["aaMnii"])
compounds = CompoundSuffixSet({"kaDuuna": 5, "tajGYaaM": 2})

corpus = [["dara", "sahaa", "mahinyaaMnii", "daMtatajGYaaMkaDuuna", "tapaasuuna", "ghyaa"]]

print("input:")
print(" ", " ".join(corpus[0]))
print()

for mode in Mode:
    config = PipelineConfig(
        mode=mode, suffix_list=suffixes, compound_set=compounds
    )
    out = preprocess(corpus, config)
    print(f"mode {mode.value:>5}:  {' '.join(out[0])}")

print()
print("with a marker the segmentation becomes reversible:")
marked_config = PipelineConfig(
    mode=Mode.CS_SS, suffix_list=suffixes, compound_set=compounds, marker="@@"
)
marked = preprocess(corpus, marked_config)
print("  marked:       ", " ".join(marked[0]))
restored = reconstruct(marked, marker="@@")
print("  reconstructed:", " ".join(restored[0]))
print("  round trip ok:", restored == corpus)
