"""
Isomorphic and non-isomorphic scoring
=====================================

Scores a few toy systems against a small gold set and shows where the two
modes disagree: order matters for isomorphic matching, and generic
paraphrases do well under non-isomorphic matching.
"""

from ncpara import Compound, GoldEntry, GoldList, TrainedBaseline, naive_baseline, score_system

af = Compound("air", "filter")
wa = Compound("work", "area")
gold = [
    GoldList(af, [GoldEntry("filter for air", 0, 5), GoldEntry("filter of air", 1, 3),
                  GoldEntry("filter that cleans the air", 2, 1)]),
    GoldList(wa, [GoldEntry("area for work", 0, 4), GoldEntry("area of work", 0, 4),
                  GoldEntry("area where work is done", 1, 2)]),
]

systems = {
    "verbatim": {g.compound: [e.paraphrase for e in g.entries] for g in gold},
    "reversed": {g.compound: [e.paraphrase for e in reversed(g.entries)] for g in gold},
    "top-only": {g.compound: [g.entries[0].paraphrase] for g in gold},
    "naive baseline": {g.compound: naive_baseline(g.compound) for g in gold},
}

print("{:<16} {:>6} {:>8}".format("system", "iso", "noniso"))
for name, sub in systems.items():
    r = score_system(sub, gold)
    print("{:<16} {:>6} {:>8}".format(name, r.iso_percent, r.noniso_percent))

# The rank multiplier R/(R + rank) controls how fast lower ranks lose weight.
for R in (1, 8, 100):
    r = score_system(systems["verbatim"], gold, R=R)
    print("verbatim at R={:<4} iso {} noniso {}".format(R, r.iso_percent, r.noniso_percent))

# Per-compound diagnostics show which gold paraphrase each test matched.
report = score_system(systems["naive baseline"], gold)
for m in report.compounds[0].iso_matches[:4]:
    print("  {:<18} -> {!s:<16} {:.3f}".format(m.test, m.gold, m.score))

# A baseline trained on gold frequencies instead of a fixed template list.
trained = TrainedBaseline(gold)
print("templates by training frequency:", trained.templates)
print("trained baseline for 'tea cup':", trained.generate(Compound("tea", "cup"), 3))
