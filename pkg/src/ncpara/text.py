"""Paraphrase normalization: tokenization, determiner removal, inflection variants."""

import re
import unicodedata
from typing import Iterable, Optional, Tuple

from .errors import EmptyInputError

TokenSeq = Tuple[str, ...]

DEFAULT_DETERMINERS = frozenset({"a", "an", "the"})

EDGE_PUNCTUATION = ".,;:!?\"'()"

_VOWELS = set("aeiou")


def tokenize(raw: str) -> TokenSeq:
    """Split a raw paraphrase into lowercase tokens.

    Text is NFC-normalized and lowercased, split on whitespace, and each
    token loses leading/trailing punctuation. Internal hyphens and
    apostrophes survive (``ice-cream``, ``driver's``).

    >>> tokenize("Filter for air.")
    ('filter', 'for', 'air')
    """
    text = unicodedata.normalize("NFC", raw).lower()
    tokens = []
    for piece in text.split():
        piece = piece.strip(EDGE_PUNCTUATION)
        if piece:
            tokens.append(piece)
    if not tokens:
        raise EmptyInputError("paraphrase has no tokens: {!r}".format(raw))
    return tuple(tokens)


def join_tokens(tokens: Iterable[str]) -> str:
    return " ".join(tokens)


def normalize_text(raw: str) -> str:
    """Canonical surface form used as a merge key: tokenized and re-joined."""
    return join_tokens(tokenize(raw))


def strip_determiners(seq: Iterable[str], determiners: Optional[Iterable[str]] = None) -> TokenSeq:
    dets = DEFAULT_DETERMINERS if determiners is None else frozenset(determiners)
    return tuple(tok for tok in seq if tok not in dets)


def parse_determiners(spec: str) -> frozenset:
    """Parse a comma-separated determiner list such as ``"a,an,the,this"``."""
    words = [w.strip().lower() for w in spec.split(",")]
    words = [w for w in words if w]
    if not words:
        raise ValueError("determiner list is empty: {!r}".format(spec))
    for w in words:
        if re.search(r"\s", w):
            raise ValueError("determiner contains whitespace: {!r}".format(w))
    return frozenset(words)


def inflection_variants(noun: str) -> set:
    # Over-generates on purpose; only used as an acceptance set.
    variants = {noun, noun + "s", noun + "es"}
    if len(noun) >= 2 and noun.endswith("y") and noun[-2] not in _VOWELS:
        variants.add(noun[:-1] + "ies")
    return variants
