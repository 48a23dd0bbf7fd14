"""Walk through longest-match suffix separation on a handful of words.

Run:  python demos/01_suffix_separation.py
"""

from mtprep.suffixes import SuffixList, separate_suffix

# a tiny Marathi-flavoured suffix inventory; real lists come from a file
# via load_suffix_list and usually hold a few dozen case endings
suffixes = SuffixList(["aaMnii", "aaMnaa", "kaDuuna", "nii", "ii"])

print("suffix list, longest first:", ", ".join(suffixes))
print()

for word in ["mahinyaaMnii", "varShaaMnii", "gheNe", "nii"]:
    split = separate_suffix(word, suffixes)
    if split.suffix is None:
        print(f"{word:>14}  ->  (no listed suffix applies)")
    else:
        print(f"{word:>14}  ->  {split.stem} + {split.suffix}")

print()
print("notes:")
print(" * one split per word: the stem is never re-examined")
print(" * a word never matches itself ('nii' skips the 'nii' entry and")
print("   falls through to the shorter 'ii')")
print(" * the longest listed match wins, which can cut too deep when a")
print("   longer, more specific entry is missing from the list:")

bad = separate_suffix("jarmaniitiila", SuffixList(["iila"]))
good = separate_suffix("jarmaniitiila", SuffixList(["iila", "tiila"]))
print(f"   with only 'iila' listed : jarmaniitiila -> {bad.stem} + {bad.suffix}")
print(f"   with 'tiila' added      : jarmaniitiila -> {good.stem} + {good.suffix}")
