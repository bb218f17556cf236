"""Writes data/dictionary.txt, the word list used by the sentence filter.

Takes the 50,000 most frequent English words (wordfreq, "large" list) that
are either in the web2 word list (english-words package) after stripping a
common inflectional suffix, or are a contraction of such a word.

usage: build_dictionary.py OUTPUT
"""
import itertools
import re
import sys

import english_words
import wordfreq

SIZE = 50000
SUFFIXES = [("ies", "y"), ("es", ""), ("s", ""), ("ied", "y"), ("ed", ""), ("ed", "e"),
            ("d", ""), ("ing", ""), ("ing", "e"), ("er", ""), ("er", "e"), ("est", ""),
            ("ly", ""), ("ers", ""), ("ings", "")]
CONTRACTION_STEMS = {"i", "don", "won", "can", "isn", "aren", "doesn", "didn", "wasn",
                     "weren", "couldn", "wouldn", "shouldn", "haven", "hasn", "hadn", "ain"}


def stems(word):
    yield word
    for suffix, replacement in SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= 2:
            stem = word[:-len(suffix)] + replacement
            yield stem
            if len(stem) > 2 and stem[-1] == stem[-2]:
                yield stem[:-1]


def accepted(word, base):
    if re.fullmatch(r"[a-z]+", word):
        if len(word) == 1 and word not in ("a", "i"):
            return False
        return any(s in base for s in stems(word))
    m = re.fullmatch(r"([a-z]+)'(s|t|re|ve|ll|d|m)", word)
    return bool(m) and (m.group(1) in base or m.group(1) in CONTRACTION_STEMS)


def main():
    base = english_words.get_english_words_set(["web2"], alpha=True, lower=True)
    words = (w for w in wordfreq.iter_wordlist("en", "large") if accepted(w, base))
    chosen = sorted(set(itertools.islice(words, SIZE)))
    with open(sys.argv[1], "w") as out:
        out.write("\n".join(chosen) + "\n")


if __name__ == "__main__":
    main()
