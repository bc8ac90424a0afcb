"""Readers and writers for the tab-separated file formats.

Raw annotations::

    modifier<TAB>head<TAB>paraphrase[<TAB>annotator_id]

Compiled gold::

    modifier<TAB>head<TAB>rank<TAB>frequency<TAB>paraphrase

System output (``position`` is 1-based and dense per compound)::

    modifier<TAB>head<TAB>position<TAB>paraphrase

Blank lines and lines starting with ``#`` are ignored everywhere.
"""

import io
from collections import OrderedDict
from typing import Dict, Iterable, Iterator, List, TextIO, Tuple, Union

from .errors import DuplicateCompoundError, EmptyInputError, ParseError
from .gold import AnnotationRecord, Compound, GoldEntry, GoldList
from .text import tokenize

Source = Union[str, TextIO, Iterable[str]]


def _lines(source: Source) -> Iterator[Tuple[int, str]]:
    if isinstance(source, str):
        source = io.StringIO(source)
    for lineno, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        yield lineno, line


def _compound(fields, lineno, name):
    try:
        return Compound(fields[0].strip(), fields[1].strip())
    except ValueError as e:
        raise ParseError("bad compound in columns 1-2: {}".format(e), lineno, name)


def _int(value, lineno, name, column, minimum):
    try:
        n = int(value)
    except ValueError:
        raise ParseError("column {} ({}) is not an integer: {!r}".format(column[0], column[1], value), lineno, name)
    if n < minimum:
        raise ParseError("column {} ({}) must be >= {}: {}".format(column[0], column[1], minimum, n), lineno, name)
    return n


def _paraphrase(value, lineno, name, column):
    try:
        tokenize(value)
    except EmptyInputError:
        raise ParseError("column {} (paraphrase) is empty".format(column), lineno, name)
    return value.strip()


def parse_raw_annotations(source: Source, name=None) -> List[AnnotationRecord]:
    records = []
    for lineno, line in _lines(source):
        fields = line.split("\t")
        if len(fields) not in (3, 4):
            raise ParseError("expected 3 or 4 tab-separated columns, got {}".format(len(fields)), lineno, name)
        compound = _compound(fields, lineno, name)
        text = _paraphrase(fields[2], lineno, name, 3)
        annotator = (fields[3].strip() or None) if len(fields) == 4 else None
        records.append(AnnotationRecord(compound, text, annotator, lineno))
    return records


def parse_gold_file(source: Source, name=None) -> List[GoldList]:
    """Read compiled gold lists, keeping file order within each compound."""
    lists: Dict[Compound, List[GoldEntry]] = OrderedDict()
    for lineno, line in _lines(source):
        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError("expected 5 tab-separated columns, got {}".format(len(fields)), lineno, name)
        compound = _compound(fields, lineno, name)
        rank = _int(fields[2], lineno, name, (3, "rank"), 0)
        freq = _int(fields[3], lineno, name, (4, "frequency"), 1)
        text = _paraphrase(fields[4], lineno, name, 5)
        lists.setdefault(compound, []).append(GoldEntry(text, rank, freq))
    return [GoldList(c, entries) for c, entries in lists.items()]


def parse_system_output(source: Source, name=None) -> "OrderedDict[Compound, List[str]]":
    """Read a system submission into ``{compound: [paraphrase, ...]}``.

    Paraphrases come back ordered by position. A compound's lines must form
    one contiguous block; a compound reappearing later is an error.
    """
    blocks: "OrderedDict[Compound, Dict[int, Tuple[int, str]]]" = OrderedDict()
    current = None
    for lineno, line in _lines(source):
        fields = line.split("\t")
        if len(fields) != 4:
            raise ParseError("expected 4 tab-separated columns, got {}".format(len(fields)), lineno, name)
        compound = _compound(fields, lineno, name)
        pos = _int(fields[2], lineno, name, (3, "position"), 1)
        text = _paraphrase(fields[3], lineno, name, 4)
        if compound != current:
            if compound in blocks:
                raise DuplicateCompoundError(compound, lineno, name)
            blocks[compound] = {}
            current = compound
        block = blocks[compound]
        if pos in block:
            raise ParseError("{}: position {} repeated (first on line {})".format(compound, pos, block[pos][0]), lineno, name)
        block[pos] = (lineno, text)

    out = OrderedDict()
    for compound, block in blocks.items():
        positions = sorted(block)
        if positions != list(range(1, len(positions) + 1)):
            missing = sorted(set(range(1, positions[-1] + 1)) - set(positions))
            raise ParseError("{}: positions not dense, missing {}".format(compound, missing),
                             block[positions[-1]][0], name)
        out[compound] = [block[p][1] for p in positions]
    return out


def parse_compound_list(source: Source, name=None) -> List[Compound]:
    """One compound per line, ``modifier head`` (tab or space separated)."""
    out = []
    for lineno, line in _lines(source):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected 'modifier head', got {} fields".format(len(fields)), lineno, name)
        out.append(_compound(fields, lineno, name))
    return out


def format_gold(gold: Iterable[GoldList]) -> str:
    rows = []
    for g in gold:
        for e in g.entries:
            rows.append((g.compound.modifier, g.compound.head, e.rank, e.paraphrase, e.frequency))
    rows.sort()
    return "".join("{}\t{}\t{}\t{}\t{}\n".format(m, h, r, f, p) for m, h, r, p, f in rows)


def write_gold_file(gold: Iterable[GoldList], stream: TextIO):
    stream.write(format_gold(gold))


def format_system_output(submission) -> str:
    """Serialize ``{compound: [paraphrase, ...]}`` or ``(compound, list)`` pairs."""
    items = submission.items() if hasattr(submission, "items") else submission
    out = []
    for compound, paraphrases in items:
        for i, p in enumerate(paraphrases, 1):
            out.append("{}\t{}\t{}\t{}\n".format(compound.modifier, compound.head, i, p))
    return "".join(out)


def write_system_output(submission, stream: TextIO):
    stream.write(format_system_output(submission))
