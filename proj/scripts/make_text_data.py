#!/usr/bin/env python3
"""Generate the synthetic question corpus, paraphrase pairs and word vectors.

Outputs (in data/):
  questions.txt      1000 questions, one per line
  paraphrases.tsv    source<TAB>reference pairs built from matched templates
  embeddings.txt     PPMI + truncated SVD vectors over questions.txt
"""
import argparse
import pathlib
import random
from collections import Counter

import numpy as np

SKILLS = ["learn python", "improve my english", "lose weight", "learn guitar", "save money",
          "find a job", "learn math", "get better sleep", "write a novel", "learn to cook",
          "start a business", "learn spanish", "build muscle", "study for exams", "learn to draw",
          "make friends", "learn machine learning", "reduce stress", "run a marathon", "learn chess"]
PLACES = ["india", "the us", "europe", "japan", "canada", "australia", "brazil", "mexico",
          "italy", "france", "germany", "thailand", "spain", "china", "egypt"]
ACTIVITIES = ["go hiking", "go snowboarding", "go surfing", "eat street food", "go camping",
              "see wildlife", "go skiing", "visit museums", "go diving", "watch sunsets"]
SEASONS = ["spring", "summer", "autumn", "winter"]
THINGS = [("laptop", "programming"), ("phone", "photography"), ("camera", "travel"),
          ("book", "beginners"), ("language", "web development"), ("car", "families"),
          ("bike", "commuting"), ("course", "data science"), ("app", "learning languages"),
          ("website", "learning math")]
BEHAVIORS = ["ask questions on quora", "procrastinate", "fear public speaking", "like horror movies",
             "drink coffee", "play video games", "believe in luck", "get angry easily",
             "travel alone", "stay up late"]
DURATIONS = ["a month", "six months", "one year", "two weeks", "three months"]

# Template families; templates within a family are paraphrases of each other.
FAMILIES = [
    ("skill", ["what is the best way to {s} ?", "how can i {s} ?", "how do i {s} quickly ?",
               "what should i do to {s} ?"]),
    ("place", ["what are the best places to {a} in {p} in {e} ?", "where can i {a} in {p} in {e} ?",
               "which places in {p} are best to {a} in {e} ?"]),
    ("thing", ["which is the best {t} for {u} ?", "what is the best {t} to buy for {u} ?",
               "what {t} should i get for {u} ?"]),
    ("why", ["why do people {b} ?", "what is the reason people {b} ?", "why do so many people {b} ?"]),
    ("time", ["is it possible to {s} in {d} ?", "can i {s} in {d} ?", "how can i {s} in {d} ?"]),
]


def fill(template, slots):
    return template.format(**slots)


def draw_slots(family, rng):
    if family == "skill":
        return {"s": rng.choice(SKILLS)}
    if family == "place":
        return {"a": rng.choice(ACTIVITIES), "p": rng.choice(PLACES), "e": rng.choice(SEASONS)}
    if family == "thing":
        t, u = rng.choice(THINGS)
        return {"t": t, "u": u}
    if family == "why":
        return {"b": rng.choice(BEHAVIORS)}
    return {"s": rng.choice(SKILLS), "d": rng.choice(DURATIONS)}


def corpus(rng, size):
    lines = []
    while len(lines) < size:
        family, templates = rng.choice(FAMILIES)
        lines.append(fill(rng.choice(templates), draw_slots(family, rng)))
    return lines


def pairs(rng, size):
    out = []
    while len(out) < size:
        family, templates = rng.choice(FAMILIES)
        slots = draw_slots(family, rng)
        src, ref = rng.sample(templates, 2)
        out.append((fill(src, slots), fill(ref, slots)))
    return out


def embeddings(lines, dim, window=3):
    tokens = [line.split() for line in lines]
    counts = Counter(w for t in tokens for w in t)
    vocab = sorted(counts)
    index = {w: i for i, w in enumerate(vocab)}
    co = np.zeros((len(vocab), len(vocab)))
    for t in tokens:
        for i, w in enumerate(t):
            for j in range(max(0, i - window), min(len(t), i + window + 1)):
                if i != j:
                    co[index[w], index[t[j]]] += 1.0
    total = co.sum()
    row = co.sum(axis=1, keepdims=True)
    col = co.sum(axis=0, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        pmi = np.log(co * total / (row * col))
    ppmi = np.where(np.isfinite(pmi) & (pmi > 0), pmi, 0.0)
    u, s, _ = np.linalg.svd(ppmi, full_matrices=False)
    k = min(dim, len(s))
    vectors = u[:, :k] * np.sqrt(s[:k])
    return vocab, vectors


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--size", type=int, default=1000)
    parser.add_argument("--pairs", type=int, default=60)
    parser.add_argument("--dim", type=int, default=32)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    lines = corpus(rng, args.size)
    (out / "questions.txt").write_text("\n".join(lines) + "\n")
    (out / "paraphrases.tsv").write_text("\n".join(f"{a}\t{b}" for a, b in pairs(rng, args.pairs)) + "\n")
    vocab, vectors = embeddings(lines, args.dim)
    with open(out / "embeddings.txt", "w") as f:
        f.write(f"{len(vocab)} {vectors.shape[1]}\n")
        for w, v in zip(vocab, vectors):
            f.write(w + " " + " ".join(f"{x:.6f}" for x in v) + "\n")


if __name__ == "__main__":
    main()
