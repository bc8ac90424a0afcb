"""Command-line interface: ``ncpara {compile,validate,score,baseline,stats}``.

Exit status is 0 on success (warnings allowed), 2 on unreadable or
malformed input, 3 on a bad option value.
"""

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from .baseline import TrainedBaseline, naive_baseline
from .errors import NCParaError
from .gold import compile_gold, dataset_stats, split_valid, validate_paraphrase
from .io import (format_gold, format_system_output, parse_compound_list, parse_gold_file,
                 parse_raw_annotations, parse_system_output)
from .scoring import DEFAULT_R, MODES, percent, score_system
from .text import DEFAULT_DETERMINERS, parse_determiners

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONFIG = 3

FORMATS = ("text", "json", "tsv")
ENV_DETERMINERS = "NCPARA_DETERMINERS"


class ConfigError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, "{}: error: {}\n".format(self.prog, message))


@dataclass
class RunConfig:
    R: float = DEFAULT_R
    mode: str = "both"
    determiners: frozenset = DEFAULT_DETERMINERS
    format: str = "text"
    per_compound: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        if not self.R > 0:
            raise ConfigError("--rank-r must be positive, got {}".format(self.R))
        if self.mode not in MODES:
            raise ConfigError("--mode must be one of {}".format(", ".join(MODES)))
        if self.format not in FORMATS:
            raise ConfigError("--format must be one of {}".format(", ".join(FORMATS)))


def _read(path, parser):
    try:
        with open(path, encoding="utf-8") as f:
            return parser(f, name=path)
    except (OSError, UnicodeDecodeError) as e:
        raise InputError("cannot read {}: {}".format(path, e))
    except NCParaError as e:
        raise InputError(str(e))


def _write(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise InputError("cannot write {}: {}".format(path, e))


def _warn(msg):
    print("warning: {}".format(msg), file=sys.stderr)


def cmd_compile(args, config):
    records = _read(args.raw, parse_raw_annotations)
    if not records:
        raise InputError("{}: no records".format(args.raw))
    _, rejected = split_valid(records)
    for rec, verdict in rejected:
        _warn("{}:{}: {}: {!r} {}".format(args.raw, rec.line, rec.compound, rec.paraphrase, verdict))
    try:
        gold = compile_gold(records, validate=True)
    except NCParaError as e:
        raise InputError(str(e))
    _write(format_gold(gold), config.output)
    return EXIT_OK


def cmd_validate(args, config):
    records = _read(args.raw, parse_raw_annotations)
    if not records:
        raise InputError("{}: no records".format(args.raw))
    rows = [(rec, validate_paraphrase(rec.compound, rec.paraphrase)) for rec in records]
    if config.format == "json":
        out = [{"line": r.line, "modifier": r.compound.modifier, "head": r.compound.head,
                "paraphrase": r.paraphrase, "valid": v.valid,
                "reason": v.reason.value if v.reason else None} for r, v in rows]
        _write(json.dumps(out, indent=2) + "\n", config.output)
    else:
        _write("".join("{}\t{}\t{}\t{}\n".format(r.line, r.compound, r.paraphrase, v) for r, v in rows),
               config.output)
    return EXIT_OK


def _score_all(args, config):
    gold = _read(args.gold, parse_gold_file)
    if not gold:
        raise InputError("{}: no gold entries".format(args.gold))
    reports = []
    for path in args.system:
        sub = _read(path, parse_system_output)
        try:
            report = score_system(sub, gold, config.mode, config.R, config.determiners, system=path)
        except NCParaError as e:
            raise InputError("{}: {}".format(path, e))
        reports.append(report)
    return reports


def render_reports(reports, config) -> str:
    if config.format == "json":
        payload = {"R": config.R, "mode": config.mode, "determiners": sorted(config.determiners),
                   "systems": [r.to_dict(config.per_compound) for r in reports]}
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    if config.format == "tsv":
        lines.append("system\tmodifier\thead\tisomorphic\tnon-isomorphic")
        for r in reports:
            lines.append("{}\t\t\t{}\t{}".format(r.system, r.iso_percent, r.noniso_percent))
            if config.per_compound:
                for c in r.compounds:
                    lines.append("{}\t{}\t{}\t{}\t{}".format(r.system, c.compound.modifier, c.compound.head,
                                                             percent(c.iso), percent(c.noniso)))
    else:
        lines.append("# system: isomorphic / non-isomorphic (R={:g})".format(config.R))
        for r in reports:
            lines.append("{}: {} / {}".format(r.system, r.iso_percent, r.noniso_percent))
            if config.per_compound:
                for c in r.compounds:
                    lines.append("  {}: {} / {}".format(c.compound, percent(c.iso), percent(c.noniso)))
    return "\n".join(lines) + "\n"


def cmd_score(args, config):
    reports = _score_all(args, config)
    for r in reports:
        for w in r.warnings:
            _warn("{}: {}".format(r.system, w))
    _write(render_reports(reports, config), config.output)
    return EXIT_OK


def cmd_baseline(args, config):
    if args.compounds:
        compounds = _read(args.compounds, parse_compound_list)
    else:
        compounds = [g.compound for g in _read(args.gold, parse_gold_file)]
    if args.train:
        if args.k < 1:
            raise ConfigError("-k must be positive")
        training = _read(args.train, parse_gold_file)
        try:
            gen = TrainedBaseline(training)
        except NCParaError as e:
            raise InputError("{}: {}".format(args.train, e))
        sub = [(c, gen.generate(c, args.k)) for c in compounds]
    else:
        sub = [(c, naive_baseline(c)) for c in compounds]
    _write(format_system_output(sub), config.output)
    return EXIT_OK


def cmd_stats(args, config):
    gold = _read(args.gold, parse_gold_file)
    if not gold:
        raise InputError("{}: no gold entries".format(args.gold))
    raw = _read(args.raw, parse_raw_annotations) if args.raw else None
    stats = dataset_stats(gold, raw)
    if config.format == "json":
        _write(json.dumps(asdict(stats), indent=2) + "\n", config.output)
    elif config.format == "tsv":
        d = asdict(stats)
        _write("\t".join(d) + "\n" + "\t".join(str(v) for v in d.values()) + "\n", config.output)
    else:
        _write(stats.table(os.path.basename(args.gold)) + "\n", config.output)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", default="both", help="iso, noniso or both (default: both)")
    common.add_argument("--rank-r", type=float, default=DEFAULT_R, dest="rank_r",
                        help="rank multiplier constant R in R/(R+rank) (default: %(default)g)")
    common.add_argument("--determiners", default=None,
                        help="comma-separated words removed before scoring "
                             "(default: ${} or a,an,the)".format(ENV_DETERMINERS))
    common.add_argument("--format", default="text", help="text, json or tsv (default: text)")
    common.add_argument("--per-compound", action="store_true", help="include per-compound scores")
    common.add_argument("-o", "--output", default=None, help="output file (default: stdout)")

    p = _Parser(prog="ncpara", description="Noun-compound paraphrase gold compilation and scoring.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("compile", parents=[common], help="compile raw annotations into a ranked gold file")
    c.add_argument("raw")
    c.set_defaults(func=cmd_compile)

    v = sub.add_parser("validate", parents=[common], help="check raw paraphrases for well-formedness")
    v.add_argument("raw")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("score", parents=[common], help="score system outputs against gold")
    s.add_argument("--gold", required=True)
    s.add_argument("--system", required=True, action="append", help="system output file (repeatable)")
    s.set_defaults(func=cmd_score)

    b = sub.add_parser("baseline", parents=[common], help="write baseline paraphrases in system format")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--compounds", help="file with one 'modifier head' per line")
    src.add_argument("--gold", help="take compounds from a gold file")
    b.add_argument("--train", help="training gold file; switches to the frequency-trained baseline")
    b.add_argument("-k", type=int, default=10, help="paraphrases per compound for the trained baseline")
    b.set_defaults(func=cmd_baseline)

    st = sub.add_parser("stats", parents=[common], help="dataset statistics for a gold file")
    st.add_argument("--gold", required=True)
    st.add_argument("--raw", help="raw annotations, for totals with duplicates")
    st.set_defaults(func=cmd_stats)
    return p


def config_from_args(args, environ=None) -> RunConfig:
    environ = os.environ if environ is None else environ
    spec = args.determiners if args.determiners is not None else environ.get(ENV_DETERMINERS)
    try:
        dets = DEFAULT_DETERMINERS if spec is None else parse_determiners(spec)
    except ValueError as e:
        raise ConfigError(str(e))
    return RunConfig(R=args.rank_r, mode=args.mode, determiners=dets, format=args.format,
                     per_compound=args.per_compound, output=args.output)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        return args.func(args, config)
    except ConfigError as e:
        print("ncpara: config error: {}".format(e), file=sys.stderr)
        return EXIT_CONFIG
    except InputError as e:
        print("ncpara: input error: {}".format(e), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
