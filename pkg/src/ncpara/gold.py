"""Compiling crowd-sourced annotations into ranked gold paraphrase lists."""

import logging
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import EmptyInputError, NCParaError
from .text import TokenSeq, inflection_variants, join_tokens, tokenize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Compound:
    """A two-word noun compound, e.g. ``Compound("air", "filter")``."""

    modifier: str
    head: str

    def __post_init__(self):
        for name in ("modifier", "head"):
            word = getattr(self, name)
            if not word or any(c.isspace() for c in word):
                raise ValueError("compound {} must be a single non-empty word: {!r}".format(name, word))
            if word != word.lower():
                object.__setattr__(self, name, word.lower())

    def __str__(self):
        return "{} {}".format(self.modifier, self.head)


@dataclass(frozen=True)
class AnnotationRecord:
    compound: Compound
    paraphrase: str
    annotator: Optional[str] = None
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class GoldEntry:
    paraphrase: str
    rank: int
    frequency: int

    @property
    def tokens(self) -> TokenSeq:
        return tokenize(self.paraphrase)


@dataclass
class GoldList:
    compound: Compound
    entries: List[GoldEntry]

    def __len__(self):
        return len(self.entries)

    def check(self):
        """Raise ValueError if the ranking rules are violated."""
        check_gold_list(self)


class Reason(str, Enum):
    MISSING_HEAD = "missing-head"
    MISSING_MODIFIER = "missing-modifier"
    NO_LINKING_PHRASE = "no-linking-phrase"
    WRONG_ORDER = "wrong-order"
    EMPTY = "empty"


@dataclass(frozen=True)
class ValidationVerdict:
    valid: bool
    reason: Optional[Reason] = None

    def __str__(self):
        return "valid" if self.valid else "invalid: {}".format(self.reason.value)


VALID = ValidationVerdict(True)


def validate_paraphrase(compound: Compound, paraphrase: str) -> ValidationVerdict:
    """Check that a paraphrase has the shape ``... HEAD linking MODIFIER ...``.

    Both nouns may appear in singular or plural form. Determiners are kept,
    so ``filter for the air`` is valid while ``filter air`` is not.
    """
    try:
        tokens = tokenize(paraphrase)
    except EmptyInputError:
        return ValidationVerdict(False, Reason.EMPTY)

    heads = inflection_variants(compound.head)
    mods = inflection_variants(compound.modifier)
    head_pos = [i for i, t in enumerate(tokens) if t in heads]
    mod_pos = [i for i, t in enumerate(tokens) if t in mods]
    if not head_pos:
        return ValidationVerdict(False, Reason.MISSING_HEAD)
    if not mod_pos:
        return ValidationVerdict(False, Reason.MISSING_MODIFIER)

    first_head = head_pos[0]
    later = [j for j in mod_pos if j > first_head]
    if not later:
        return ValidationVerdict(False, Reason.WRONG_ORDER)
    if max(later) - first_head < 2:
        return ValidationVerdict(False, Reason.NO_LINKING_PHRASE)
    return VALID


def split_valid(records: Iterable[AnnotationRecord]):
    """Partition records into ``(valid, rejected)``; rejected items carry verdicts."""
    valid, rejected = [], []
    for rec in records:
        verdict = validate_paraphrase(rec.compound, rec.paraphrase)
        if verdict.valid:
            valid.append(rec)
        else:
            rejected.append((rec, verdict))
    return valid, rejected


def rank_paraphrases(counts: Counter) -> List[GoldEntry]:
    """Turn paraphrase frequencies into ranked entries.

    Ranks index the distinct frequencies in descending order, so the most
    frequent paraphrases get rank 0 and all singletons share the last rank.
    """
    levels = sorted(set(counts.values()), reverse=True)
    rank_of = {freq: i for i, freq in enumerate(levels)}
    entries = [GoldEntry(p, rank_of[f], f) for p, f in counts.items()]
    entries.sort(key=lambda e: (e.rank, e.paraphrase))
    return entries


def compile_gold(records: Iterable[AnnotationRecord], validate: bool = True) -> List[GoldList]:
    """Merge identical paraphrases per compound and rank them by frequency.

    Paraphrases are merged on their tokenized, lowercased form (determiners
    kept). Invalid paraphrases are dropped with a logged warning unless
    ``validate`` is false. Output is sorted by compound.
    """
    records = list(records)
    if not records:
        raise EmptyInputError("no records")

    counts = OrderedDict()
    for rec in records:
        per = counts.setdefault(rec.compound, Counter())
        if validate:
            verdict = validate_paraphrase(rec.compound, rec.paraphrase)
            if not verdict.valid:
                logger.warning("%s: dropping %r (%s)", rec.compound, rec.paraphrase, verdict)
                continue
        per[join_tokens(tokenize(rec.paraphrase))] += 1

    gold = []
    for compound in sorted(counts):
        if not counts[compound]:
            raise NCParaError("compound has no valid paraphrases: {}".format(compound))
        gold.append(GoldList(compound, rank_paraphrases(counts[compound])))
    return gold


def check_gold_list(gold: GoldList):
    if not gold.entries:
        raise ValueError("{}: empty gold list".format(gold.compound))
    rank_freqs = {}
    for e in gold.entries:
        rank_freqs.setdefault(e.rank, set()).add(e.frequency)
    ranks = sorted(rank_freqs)
    if ranks != list(range(len(ranks))):
        raise ValueError("{}: ranks are not consecutive from 0: {}".format(gold.compound, ranks))
    prev = None
    for r in ranks:
        freqs = rank_freqs[r]
        if len(freqs) != 1:
            raise ValueError("{}: rank {} has several frequencies {}".format(gold.compound, r, sorted(freqs)))
        (f,) = freqs
        if prev is not None and f >= prev:
            raise ValueError("{}: frequency does not decrease at rank {}".format(gold.compound, r))
        prev = f
    singles = {e.rank for e in gold.entries if e.frequency == 1}
    if singles and singles != {ranks[-1]}:
        raise ValueError("{}: frequency-1 paraphrases not at the lowest rank".format(gold.compound))


@dataclass(frozen=True)
class DatasetStats:
    compounds: int
    total: int
    unique: int
    total_min: int
    total_max: int
    total_avg: float
    unique_min: int
    unique_max: int
    unique_avg: float

    def table(self, title: str = "Dataset") -> str:
        rows = [
            ("paraphrases", self.total, self.total_min, self.total_max, self.total_avg),
            ("unique paraphrases", self.unique, self.unique_min, self.unique_max, self.unique_avg),
        ]
        lines = [
            "{:<20}{:>8}   {}".format("", "Total", "Min / Max / Avg"),
            "{} ({} NCs)".format(title, self.compounds),
        ]
        for name, tot, lo, hi, avg in rows:
            lines.append("{:<20}{:>8,}   {} / {} / {:.1f}".format(name, tot, lo, hi, avg))
        return "\n".join(lines)


def _spread(values: Sequence[int]) -> Tuple[int, int, float]:
    return min(values), max(values), sum(values) / len(values)


def dataset_stats(gold: Sequence[GoldList], raw: Optional[Iterable[AnnotationRecord]] = None) -> DatasetStats:
    """Table-style statistics for a compiled dataset.

    Totals with duplicates come from ``raw`` when given, otherwise from the
    summed gold frequencies (the two agree for gold compiled from ``raw``
    once invalid records are removed).
    """
    if not gold:
        raise EmptyInputError("no compounds")
    unique = [len(g.entries) for g in gold]
    if raw is None:
        total = [sum(e.frequency for e in g.entries) for g in gold]
    else:
        per = Counter(rec.compound for rec in raw)
        total = [per[g.compound] for g in gold]
    tmin, tmax, tavg = _spread(total)
    umin, umax, uavg = _spread(unique)
    return DatasetStats(len(gold), sum(total), sum(unique), tmin, tmax, tavg, umin, umax, uavg)
