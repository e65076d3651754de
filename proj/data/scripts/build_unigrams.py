#!/usr/bin/env python3
"""Regenerate data/unigrams.tsv and data/lexicons/stoplist.txt from wordfreq.

Counts are wordfreq's English frequencies scaled by 1e9 and rounded. The model
drops "bengaluru" so that the hashtag #Bengaluru splits into bengal + uru, the
over-segmentation failure the pipeline is expected to tolerate.
"""
import pathlib
import re

import wordfreq

ROOT = pathlib.Path(__file__).resolve().parents[1]
WORD = re.compile(r"[a-z]+")

# Proper names that show up among the most frequent English words; they must
# not suppress proper-noun tagging or gazetteer matches.
NOT_STOPWORDS = {
    "london", "america", "york", "china", "england", "australia", "europe",
    "india", "uk", "washington", "john", "david", "james", "michael", "paul",
    "george", "god", "mr", "dr", "st", "la", "de", "al",
}
REMOVED = {"bengaluru"}
REQUIRED = {"bengal": None, "uru": None}


def main() -> None:
    words = [w for w in wordfreq.top_n_list("en", 80000) if WORD.fullmatch(w)]
    model = []
    for w in words:
        if w in REMOVED:
            continue
        count = max(1, round(wordfreq.word_frequency(w, "en") * 1e9))
        model.append((w, count))
        if len(model) == 50000:
            break
    present = {w for w, _ in model}
    for w in REQUIRED:
        if w not in present:
            model.append((w, max(1, round(wordfreq.word_frequency(w, "en") * 1e9))))
    with open(ROOT / "unigrams.tsv", "w", encoding="utf-8") as out:
        for w, c in model:
            out.write(f"{w}\t{c}\n")

    stop = [w for w in words if w not in NOT_STOPWORDS][:1000]
    with open(ROOT / "lexicons" / "stoplist.txt", "w", encoding="utf-8") as out:
        out.write("# Most frequent English words (wordfreq), proper names removed.\n")
        for w in stop:
            out.write(w + "\n")


if __name__ == "__main__":
    main()
