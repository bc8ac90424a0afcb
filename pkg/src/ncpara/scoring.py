"""Rank-weighted scoring of system paraphrases against gold lists.

Each test paraphrase is paired with the gold paraphrase maximizing
``normalized_overlap * R / (R + rank)``. In isomorphic mode the pairing is
one-to-one and greedy in submission order; in non-isomorphic mode every
test paraphrase picks its best gold entry independently.

Per-compound scores:

* isomorphic: sum of matched products over the sum of all gold rank
  multipliers, so reproducing every gold paraphrase scores 1.0.
* non-isomorphic: mean of the best products over the test paraphrases.

A system score is the mean over all gold compounds; compounds the system
skipped count as 0.
"""

import math
from collections import OrderedDict
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DuplicateCompoundError, EmptyInputError, ParseError
from .gold import Compound, GoldList
from .match import normalized_overlap
from .text import TokenSeq, strip_determiners, tokenize

DEFAULT_R = 8.0
MODES = ("iso", "noniso", "both")


def rank_multiplier(rank: int, R: float = DEFAULT_R) -> float:
    if R <= 0:
        raise ValueError("R must be positive, got {}".format(R))
    if rank < 0:
        raise ValueError("rank must be non-negative, got {}".format(rank))
    return R / (R + rank)


class _PreparedGold:
    """Determiner-stripped gold tokens, in tie-break order (rank, file position)."""

    def __init__(self, gold: GoldList, determiners=None):
        if not gold.entries:
            raise ValueError("{}: empty gold list".format(gold.compound))
        self.gold = gold
        self.tokens = [strip_determiners(e.tokens, determiners) for e in gold.entries]
        self.ranks = [e.rank for e in gold.entries]
        self.order = sorted(range(len(gold.entries)), key=lambda i: (self.ranks[i], i))

    def best(self, test: TokenSeq, excluded, R) -> Optional[Tuple[int, float]]:
        best = None
        for i in self.order:
            if i in excluded:
                continue
            s = normalized_overlap(test, self.tokens[i]) * rank_multiplier(self.ranks[i], R)
            if s > 0.0 and (best is None or s > best[1]):
                best = (i, s)
        return best

    def total_weight(self, R) -> float:
        return math.fsum(rank_multiplier(r, R) for r in self.ranks)


def _prepare(gold, determiners):
    return gold if isinstance(gold, _PreparedGold) else _PreparedGold(gold, determiners)


def best_gold_match(test: TokenSeq, gold: GoldList, excluded=frozenset(), R: float = DEFAULT_R,
                    determiners=None) -> Optional[Tuple[int, float]]:
    """Index of the gold entry maximizing overlap times rank multiplier.

    Returns ``(index, weighted_score)`` or None when nothing scores above 0.
    Ties go to the lower rank, then to the earlier entry.
    """
    return _prepare(gold, determiners).best(tuple(test), excluded, R)


def _noniso(tests, prepared, R):
    matches = [prepared.best(t, (), R) for t in tests]
    if not tests:
        return 0.0, matches
    # fsum is exact, so the mean does not depend on submission order
    return math.fsum(m[1] for m in matches if m is not None) / len(tests), matches


def _iso(tests, prepared, R):
    consumed = set()
    matches = []
    for t in tests:
        m = prepared.best(t, consumed, R)
        if m is not None:
            consumed.add(m[0])
        matches.append(m)
    total = math.fsum(m[1] for m in matches if m is not None)
    return min(1.0, max(0.0, total / prepared.total_weight(R))), matches


def score_compound_noniso(tests: Sequence[TokenSeq], gold: GoldList, R: float = DEFAULT_R,
                          determiners=None) -> float:
    return _noniso([tuple(t) for t in tests], _prepare(gold, determiners), R)[0]


def score_compound_iso(tests: Sequence[TokenSeq], gold: GoldList, R: float = DEFAULT_R,
                       determiners=None) -> float:
    """Greedy one-to-one score; the order of ``tests`` matters."""
    return _iso([tuple(t) for t in tests], _prepare(gold, determiners), R)[0]


@dataclass
class Match:
    test: str
    gold_index: Optional[int]
    gold: Optional[str]
    score: float

    def to_dict(self):
        return {"test": self.test, "gold_index": self.gold_index, "gold": self.gold, "score": self.score}


@dataclass
class CompoundScore:
    compound: Compound
    iso: Optional[float] = None
    noniso: Optional[float] = None
    iso_matches: List[Match] = field(default_factory=list)
    noniso_matches: List[Match] = field(default_factory=list)
    submitted: bool = True

    def to_dict(self):
        d = {"modifier": self.compound.modifier, "head": self.compound.head, "submitted": self.submitted}
        if self.iso is not None:
            d["iso"] = self.iso
            d["iso_matches"] = [m.to_dict() for m in self.iso_matches]
        if self.noniso is not None:
            d["noniso"] = self.noniso
            d["noniso_matches"] = [m.to_dict() for m in self.noniso_matches]
        return d


def percent(value: Optional[float]) -> str:
    """Render a [0, 1] score as a percentage with one decimal, half-even."""
    if value is None:
        return "-"
    return str((Decimal(repr(value)) * 100).quantize(Decimal("0.1"), rounding=ROUND_HALF_EVEN))


@dataclass
class ScoreReport:
    system: Optional[str]
    mode: str
    R: float
    compounds: List[CompoundScore]
    iso: Optional[float]
    noniso: Optional[float]
    warnings: List[str] = field(default_factory=list)

    @property
    def iso_percent(self) -> str:
        return percent(self.iso)

    @property
    def noniso_percent(self) -> str:
        return percent(self.noniso)

    def to_dict(self, per_compound: bool = False):
        d = OrderedDict()
        d["system"] = self.system
        d["mode"] = self.mode
        d["R"] = self.R
        if self.iso is not None:
            d["iso"] = self.iso
            d["iso_percent"] = self.iso_percent
        if self.noniso is not None:
            d["noniso"] = self.noniso
            d["noniso_percent"] = self.noniso_percent
        d["warnings"] = list(self.warnings)
        if per_compound:
            d["compounds"] = [c.to_dict() for c in self.compounds]
        return d


def _as_submission(submission) -> "OrderedDict[Compound, List[str]]":
    if isinstance(submission, Mapping):
        return OrderedDict((c, list(p)) for c, p in submission.items())
    out = OrderedDict()
    for compound, paraphrases in submission:
        if compound in out:
            raise DuplicateCompoundError(compound)
        out[compound] = list(paraphrases)
    return out


def prepare_tests(compound: Compound, raw: Iterable[str], determiners=None):
    """Tokenize, strip and deduplicate one compound's submitted paraphrases.

    Returns ``(texts, token_seqs, warnings)`` aligned by position.
    """
    texts, seqs, warnings = [], [], []
    seen = {}
    for k, text in enumerate(raw, 1):
        try:
            toks = strip_determiners(tokenize(text), determiners)
        except EmptyInputError:
            raise ParseError("{}: paraphrase {} is empty".format(compound, k))
        if toks in seen:
            warnings.append("{}: duplicate paraphrase {!r} at position {} (first at {}) ignored".format(
                compound, text, k, seen[toks]))
            continue
        seen[toks] = k
        if not toks:
            warnings.append("{}: paraphrase {!r} is empty after removing determiners; scores 0".format(compound, text))
        texts.append(text)
        seqs.append(toks)
    return texts, seqs, warnings


def _matches(texts, matches, gold):
    out = []
    for text, m in zip(texts, matches):
        if m is None:
            out.append(Match(text, None, None, 0.0))
        else:
            out.append(Match(text, m[0], gold.entries[m[0]].paraphrase, m[1]))
    return out


def score_compound(compound_gold: GoldList, raw: Sequence[str], mode: str = "both", R: float = DEFAULT_R,
                   determiners=None) -> Tuple[CompoundScore, List[str]]:
    """Score one compound's raw paraphrases; returns the score and any warnings."""
    texts, seqs, warnings = prepare_tests(compound_gold.compound, raw, determiners)
    prepared = _PreparedGold(compound_gold, determiners)
    cs = CompoundScore(compound_gold.compound)
    if mode in ("iso", "both"):
        cs.iso, m = _iso(seqs, prepared, R)
        cs.iso_matches = _matches(texts, m, compound_gold)
    if mode in ("noniso", "both"):
        cs.noniso, m = _noniso(seqs, prepared, R)
        cs.noniso_matches = _matches(texts, m, compound_gold)
    return cs, warnings


def score_system(submission, gold: Sequence[GoldList], mode: str = "both", R: float = DEFAULT_R,
                 determiners=None, system: Optional[str] = None) -> ScoreReport:
    """Score a whole submission against a gold dataset.

    ``submission`` maps compounds to ranked raw paraphrase strings, either
    as a mapping or as ``(compound, paraphrases)`` pairs (a repeated
    compound raises DuplicateCompoundError).
    """
    if mode not in MODES:
        raise ValueError("mode must be one of {}, got {!r}".format(MODES, mode))
    if R <= 0:
        raise ValueError("R must be positive, got {}".format(R))
    if not gold:
        raise EmptyInputError("gold dataset is empty")
    sub = _as_submission(submission)
    gold_ids: Dict[Compound, GoldList] = OrderedDict()
    for g in gold:
        if g.compound in gold_ids:
            raise DuplicateCompoundError(g.compound, source="gold")
        gold_ids[g.compound] = g

    warnings = []
    for c in sub:
        if c not in gold_ids:
            warnings.append("{}: not in gold, ignored".format(c))

    results = []
    for compound, g in gold_ids.items():
        if compound not in sub:
            warnings.append("{}: no paraphrases submitted; scores 0".format(compound))
            cs = CompoundScore(compound, submitted=False)
            if mode in ("iso", "both"):
                cs.iso = 0.0
            if mode in ("noniso", "both"):
                cs.noniso = 0.0
        else:
            cs, w = score_compound(g, sub[compound], mode, R, determiners)
            warnings.extend(w)
        results.append(cs)

    n = len(results)
    iso = math.fsum(c.iso for c in results) / n if mode in ("iso", "both") else None
    noniso = math.fsum(c.noniso for c in results) / n if mode in ("noniso", "both") else None
    return ScoreReport(system, mode, float(R), results, iso, noniso, warnings)
