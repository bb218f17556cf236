"""Writes the synthetic mini-corpus under data/minicorpus/.

Two topics of ten dialogs each. Important sentences are built around
category-lexicon words (family, money, health, death, work, religion);
the rest use words outside the lexicon. Pyramids and three annotators
are simulated with a little disagreement.

usage: build_minicorpus.py DATA_DIR
"""
import hashlib
import json
import os
import random
import re
import sys

SEED = 2017
SUMMARIES = ["S1", "S2", "S3", "S4", "S5"]
ANNOTATORS = ["a1", "a2", "a3"]

TOPICS = {
    "gun_control": {
        "subject": ["The proposal", "That statute", "The amendment", "This ordinance",
                    "The registry", "The second clause", "It"],
        "object": ["rifles in a different state", "the original wording of the text",
                   "a permit for hunters", "the same question about ammunition",
                   "the older court records", "the list of approved rifles"],
    },
    "gay_marriage": {
        "subject": ["The ruling", "That statute", "The ballot measure", "This decision",
                    "The county clerk", "The second clause", "It"],
        "object": ["licenses in a different state", "the original wording of the text",
                   "a vote in the legislature", "the same question about licenses",
                   "the older court records", "the list of approved forms"],
    },
}

NEUTRAL_VERBS = ["mentions", "describes", "covers", "addresses", "lists", "repeats"]

IMPORTANT_SUBJECTS = ["Every family", "Our children", "My wife and kids", "Poor parents",
                      "A grieving mother", "Working families", "They"]
IMPORTANT_VERBS = ["lose", "need", "deserve", "protect", "want"]
IMPORTANT_OBJECTS = ["their health and their money", "the wages they earned at work",
                     "medical care after an injury", "money for the hospital bills",
                     "a safe home and a decent salary", "their lives and their jobs",
                     "the church and the faith of their family",
                     "care when a child dies of a wound"]

NEUTRAL_OPENERS = ["Still, ", "Again, ", "So ", ""]


def load_lexicon(path):
    exact, prefixes = set(), []
    with open(path) as f:
        parts = f.read().split("%")
    for line in parts[2].splitlines():
        if not line.strip():
            continue
        word = line.split("\t")[0].lower()
        if word.endswith("*"):
            prefixes.append(word[:-1])
        else:
            exact.add(word)
    return exact, prefixes


PRONOUNS = {"it", "they"}


def matches(sentence, lexicon):
    exact, prefixes = lexicon
    tokens = [t for t in re.findall(r"[a-z']+", sentence.lower()) if t not in PRONOUNS]
    return sum(1 for t in tokens if t in exact or any(t.startswith(p) for p in prefixes))


def important_sentence(rng):
    return "{} {} {}.".format(rng.choice(IMPORTANT_SUBJECTS), rng.choice(IMPORTANT_VERBS),
                              rng.choice(IMPORTANT_OBJECTS))


def neutral_sentence(rng, topic, lexicon):
    while True:
        opener = rng.choice(NEUTRAL_OPENERS)
        subject = rng.choice(TOPICS[topic]["subject"])
        if opener:
            subject = subject[0].lower() + subject[1:]
        text = "{}{} {} {}.".format(opener, subject, rng.choice(NEUTRAL_VERBS),
                                    rng.choice(TOPICS[topic]["object"]))
        text = text[0].upper() + text[1:]
        if matches(text, lexicon) == 0:
            return text


def build(data_dir):
    rng = random.Random(SEED)
    lexicon = load_lexicon(os.path.join(data_dir, "categories.dic"))
    for words in IMPORTANT_OBJECTS:
        assert matches(words, lexicon) >= 2, words
    out_dir = os.path.join(data_dir, "minicorpus")
    os.makedirs(out_dir, exist_ok=True)
    corpus, pyramid, annotations, vocabulary = [], [], [], set()

    for t_index, topic in enumerate(sorted(TOPICS)):
        for d in range(10):
            dialog_id = "{}-{:02d}".format(topic.split("_")[0], d)
            authors = ["u{}{:02d}a".format(t_index, d), "u{}{:02d}b".format(t_index, d)]
            turns = []
            scu = 0
            for turn_index in range(6):
                sentences = []
                for s in range(3):
                    important = rng.random() < 0.35
                    text = important_sentence(rng) if important else neutral_sentence(rng, topic, lexicon)
                    sentences.append(text)
                    vocabulary.update(re.findall(r"[a-z']+", text.lower()))
                    key = {"dialog_id": dialog_id, "turn_index": turn_index, "index_in_turn": s}
                    scu_id = None
                    if important:
                        contributors = rng.sample(SUMMARIES, rng.choice([4, 5]))
                    elif rng.random() < 0.4:
                        contributors = rng.sample(SUMMARIES, rng.choice([1, 2]))
                    else:
                        contributors = None
                    if contributors:
                        scu += 1
                        scu_id = "{}.scu{}".format(dialog_id, scu)
                        pyramid.append({"scu_id": scu_id, "label_text": text,
                                        "contributors": sorted(contributors)})
                    for annotator in ANNOTATORS:
                        ids = []
                        if scu_id and rng.random() < (0.9 if important else 0.8):
                            ids.append(scu_id)
                        record = dict(key)
                        record["annotator"] = annotator
                        record["scu_ids"] = ids
                        annotations.append(record)
                turns.append({"author": authors[turn_index % 2], "index": turn_index,
                              "text": " ".join(sentences)})
            corpus.append({"dialog_id": dialog_id, "topic": topic, "turns": turns})

    def write_jsonl(name, records):
        with open(os.path.join(out_dir, name), "w") as f:
            for r in records:
                f.write(json.dumps(r, sort_keys=True) + "\n")

    write_jsonl("corpus.jsonl", corpus)
    write_jsonl("pyramid.jsonl", pyramid)
    write_jsonl("annotations.jsonl", annotations)

    with open(os.path.join(out_dir, "embeddings.vec"), "w") as f:
        words = sorted(vocabulary)
        f.write("{} 4\n".format(len(words)))
        for w in words:
            digest = hashlib.sha256(w.encode()).digest()
            values = [(b / 255.0) * 2 - 1 for b in digest[:4]]
            f.write(w + " " + " ".join("{:.4f}".format(v) for v in values) + "\n")


if __name__ == "__main__":
    build(sys.argv[1])
