"""Independent reference implementations used to cross-check the package.

Everything in this file is deliberately written as a direct, brute-force
transcription of the underlying definitions.  None of it imports mtprep,
so a bug in the package cannot hide behind a shared helper.
"""

import math
from collections import Counter


def ngrams(tokens, n):
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


# --- BLEU ------------------------------------------------------------------

def bleu_oracle(hyps, refs, max_n=4):
    """Corpus BLEU: geometric mean of clipped n-gram precisions times the
    brevity penalty.  Orders with no hypothesis n-grams contribute factor 1;
    a zero numerator at any order with a nonzero denominator gives 0."""
    log_sum = 0.0
    for n in range(1, max_n + 1):
        matched = 0
        total = 0
        for hyp, ref in zip(hyps, refs):
            hyp_counts = Counter(ngrams(hyp, n))
            ref_counts = Counter(ngrams(ref, n))
            for gram, count in hyp_counts.items():
                matched += min(count, ref_counts[gram])
            total += max(len(hyp) - n + 1, 0)
        if total == 0:
            continue
        if matched == 0:
            return 0.0
        log_sum += math.log(matched / total) / max_n
    hyp_len = sum(len(h) for h in hyps)
    ref_len = sum(len(r) for r in refs)
    bp = 1.0 if hyp_len > ref_len else math.exp(1.0 - ref_len / hyp_len)
    return bp * math.exp(log_sum)


# --- NIST ------------------------------------------------------------------

def nist_oracle(hyps, refs, max_n=5):
    """Information-weighted n-gram co-occurrence with the calibrated brevity
    factor.  Info weights come from the reference corpus of this run."""
    counts = Counter()
    total_words = 0
    for ref in refs:
        total_words += len(ref)
        for n in range(1, max_n + 1):
            counts.update(ngrams(ref, n))

    def info(gram):
        prefix = counts[gram[:-1]] if len(gram) > 1 else total_words
        return math.log2(prefix / counts[gram])

    score = 0.0
    for n in range(1, max_n + 1):
        info_sum = 0.0
        total = 0
        for hyp, ref in zip(hyps, refs):
            hyp_counts = Counter(ngrams(hyp, n))
            ref_counts = Counter(ngrams(ref, n))
            for gram, count in hyp_counts.items():
                matched = min(count, ref_counts[gram])
                if matched:
                    info_sum += matched * info(gram)
            total += max(len(hyp) - n + 1, 0)
        if total:
            score += info_sum / total

    hyp_len = sum(len(h) for h in hyps)
    ref_len = sum(len(r) for r in refs)
    ratio = min(hyp_len / ref_len, 1.0)
    beta = math.log(0.5) / math.log(2.0 / 3.0) ** 2
    return score * math.exp(beta * math.log(ratio) ** 2)


# --- edit distance / TER ---------------------------------------------------

def levenshtein(a, b):
    """Word-level edit distance with unit insert/delete/substitute costs."""
    prev = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        cur = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cur[j] = min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (0 if a[i - 1] == b[j - 1] else 1),
            )
        prev = cur
    return prev[-1]


def wer_oracle(hyps, refs):
    return sum(levenshtein(h, r) for h, r in zip(hyps, refs)) / sum(
        len(r) for r in refs
    )


def shift_candidates(hyp, ref):
    """All (i, j, length) moves: hyp[i:i+length] equals ref[j:j+length]."""
    out = []
    for i in range(len(hyp)):
        for j in range(len(ref)):
            if i == j:
                continue
            length = 0
            while (
                i + length < len(hyp)
                and j + length < len(ref)
                and hyp[i + length] == ref[j + length]
            ):
                length += 1
                out.append((i, j, length))
    return out


def apply_shift(hyp, i, j, length):
    span = hyp[i : i + length]
    rest = hyp[:i] + hyp[i + length :]
    return rest[:j] + span + rest[j:]


def exhaustive_ter_edits(hyp, ref):
    """Minimum shifts + remaining edit distance over every shift sequence.

    Breadth-first search over hypothesis permutation states; the BFS layer
    is the number of shifts spent so far, so the first visit to a state uses
    the fewest shifts.  Layers that can no longer beat the best known total
    are pruned.  Only feasible for very short sentences.
    """
    start = tuple(hyp)
    best = levenshtein(hyp, ref)
    seen = {start}
    frontier = [start]
    depth = 0
    while frontier and depth + 1 < best:
        depth += 1
        nxt = []
        for state in frontier:
            for i, j, length in shift_candidates(state, ref):
                shifted = tuple(apply_shift(list(state), i, j, length))
                if shifted in seen:
                    continue
                seen.add(shifted)
                total = depth + levenshtein(shifted, ref)
                if total < best:
                    best = total
                nxt.append(shifted)
        frontier = nxt
    return best


# --- splitting -------------------------------------------------------------

def longest_suffix_oracle(word, suffix_words):
    """Exhaustive scan for the longest strict suffix match."""
    matches = [
        s for s in set(suffix_words) if word.endswith(s) and len(word) > len(s)
    ]
    if not matches:
        return word, None
    best = max(matches, key=len)
    return word[: -len(best)], best


def induce_oracle(vocab_words, margin=5):
    """Plain double loop over the vocabulary: v is a compound suffix when
    some other word w satisfies w.endswith(v) and len(w) > len(v) + margin."""
    words = sorted(set(vocab_words))
    induced = {}
    for v in words:
        trailing = sum(
            1
            for w in words
            if w != v and w.endswith(v) and len(w) > len(v) + margin
        )
        if trailing:
            induced[v] = trailing
    return induced
