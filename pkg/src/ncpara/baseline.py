"""Baseline paraphrase generators."""

from collections import Counter
from typing import List, Sequence

from .errors import EmptyInputError
from .gold import Compound, GoldList
from .text import inflection_variants, join_tokens, tokenize

NAIVE_TEMPLATES = (
    "of",
    "in",
    "for",
    "with",
    "on",
    "about",
    "has",
    "to",
    "used for",
    "used in",
)


def instantiate(compound: Compound, linking: str) -> str:
    return "{} {} {}".format(compound.head, linking, compound.modifier)


def naive_baseline(compound: Compound) -> List[str]:
    """The fixed ten ``HEAD <link> MODIFIER`` paraphrases, same order for every compound."""
    return [instantiate(compound, link) for link in NAIVE_TEMPLATES]


def linking_phrase(compound: Compound, paraphrase: str):
    """Tokens strictly between the first head and the next modifier, or None."""
    tokens = tokenize(paraphrase)
    heads = inflection_variants(compound.head)
    mods = inflection_variants(compound.modifier)
    for i, tok in enumerate(tokens):
        if tok in heads:
            for j in range(i + 1, len(tokens)):
                if tokens[j] in mods:
                    return join_tokens(tokens[i + 1:j]) or None
            return None
    return None


def template_counts(training: Sequence[GoldList]) -> Counter:
    """Total training frequency of each linking phrase across compounds."""
    if not training:
        raise EmptyInputError("training gold is empty")
    counts = Counter()
    for g in training:
        for e in g.entries:
            link = linking_phrase(g.compound, e.paraphrase)
            if link is not None:
                counts[link] += e.frequency
    return counts


def ranked_templates(training: Sequence[GoldList]) -> List[str]:
    counts = template_counts(training)
    return [t for t, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))]


class TrainedBaseline:
    """Ranks linking phrases by their popularity in training gold.

    The table is built once; ``generate`` is read-only and thread-safe.
    """

    def __init__(self, training: Sequence[GoldList]):
        self.counts = template_counts(training)
        self.templates = [t for t, _ in sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))]

    def generate(self, compound: Compound, k: int) -> List[str]:
        if k < 1:
            raise ValueError("k must be positive, got {}".format(k))
        return [instantiate(compound, t) for t in self.templates[:k]]


def trained_baseline(training: Sequence[GoldList], compound: Compound, k: int) -> List[str]:
    return TrainedBaseline(training).generate(compound, k)
