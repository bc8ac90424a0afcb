"""
From raw annotations to a ranked gold list
==========================================

Raw crowd annotations are validated, identical paraphrases merged, and the
survivors ranked by how many annotators proposed them.
"""

import io

from ncpara import compile_gold, dataset_stats, parse_raw_annotations, validate_paraphrase, write_gold_file

RAW = """\
air\tfilter\tfilter for air\tw1
air\tfilter\tFilter for air.\tw2
air\tfilter\tfilter for air\tw3
air\tfilter\tfilter of air\tw1
air\tfilter\tfilter of air\tw4
air\tfilter\tfilter that cleans the air\tw2
air\tfilter\tfilter air\tw5
air\tfilter\tfiltration of air\tw5
work\tarea\tarea for work\tw1
work\tarea\tarea of work\tw2
work\tarea\tarea for work\tw3
work\tarea\tarea where work is done\tw4
work\tarea\tan area where construction work is carried out\tw5
"""

records = parse_raw_annotations(RAW)

# Each paraphrase must contain the head, then a linking phrase, then the
# modifier. Plural forms are fine; derived forms such as "filtration" are not.
for rec in records:
    print("{:<50} {}".format(rec.paraphrase, validate_paraphrase(rec.compound, rec.paraphrase)))

# compile_gold drops the invalid ones (logging a warning) and ranks the rest.
# Paraphrases proposed once always end up sharing the last rank.
gold = compile_gold(records)
buf = io.StringIO()
write_gold_file(gold, buf)
print()
print(buf.getvalue())

print(dataset_stats(gold).table("Demo"))
