"""Induce compound suffixes from a vocabulary, then split compounds with them.

Run:  python demos/02_compound_splitting.py
"""

from mtprep.compounds import induce_compound_suffixes, split_compound
from mtprep.corpus import build_vocabulary, parse_token_corpus

# monolingual text stands in for the large corpus a real run would use
monolingual = parse_token_corpus(
    "daMtatajGYaaMkaDuuna tapaasuuna ghyaa\n"
    "hRdayatajGYaaMkaDuuna salla ghyaa\n"
    "tvachaatajGYaaMkaDuuna aushadha ghyaa\n"
    "DaakTarakaDuuna tapaasuuna ghyaa\n"
    "sarakaarakaDuuna aadesha aalaa\n"
    "hRdayatajGYaaM bheTale\n"
    "tvachaatajGYaaM mhaNaale\n"
    "kaDuuna tajGYaaM DaakTara sarakaara\n"
)

vocab = build_vocabulary(monolingual)
inventory = induce_compound_suffixes(vocab)

print("vocabulary types:", len(vocab))
print("induced compound suffixes (word counted when it trails a word at")
print("least six code points longer):")
for suffix in inventory.ordered:
    print(f"  {suffix}  seen trailing {inventory.counts[suffix]} longer types")
print()

for word in ["daMtatajGYaaMkaDuuna", "sarakaarakaDuuna", "tapaasuuna", "kaDuuna"]:
    pieces = split_compound(word, inventory)
    arrow = " + ".join(pieces) if len(pieces) > 1 else "(left whole)"
    print(f"{word:>22}  ->  {arrow}")

print()
print("splitting strips inventory members off the right edge, longest")
print("first, and recurses on what remains; short words are protected by")
print("the same length margin the induction used")
