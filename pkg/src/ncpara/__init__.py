"""Gold-standard compilation and fuzzy n-gram scoring for noun-compound paraphrases."""

from .baseline import NAIVE_TEMPLATES, TrainedBaseline, naive_baseline, trained_baseline
from .errors import DuplicateCompoundError, EmptyInputError, NCParaError, ParseError
from .gold import (AnnotationRecord, Compound, DatasetStats, GoldEntry, GoldList, Reason, ValidationVerdict,
                   check_gold_list, compile_gold, dataset_stats, validate_paraphrase)
from .io import (format_gold, format_system_output, parse_compound_list, parse_gold_file, parse_raw_annotations,
                 parse_system_output, write_gold_file, write_system_output)
from .match import ngram_match, normalized_overlap, overlap_score, self_score, word_match
from .scoring import (DEFAULT_R, CompoundScore, ScoreReport, best_gold_match, rank_multiplier, score_compound_iso,
                      score_compound_noniso, score_system)
from .text import DEFAULT_DETERMINERS, inflection_variants, strip_determiners, tokenize

__version__ = "0.1.0"
