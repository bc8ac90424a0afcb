"""
Fuzzy word and n-gram matching
==============================

Walks through how two paraphrases are compared: word-level prefix
matching, n-gram matches, the overlap sum and its normalization.
"""

from ncpara import ngram_match, normalized_overlap, overlap_score, self_score, strip_determiners, tokenize, word_match

# Identical words score 1. Different words sharing a prefix of at least
# three characters get a partial score; "cut" is shared here.
print("cutting ~ cuts :", round(word_match("cutting", "cuts"), 4))
print("form ~ for     :", round(word_match("form", "for"), 4))
print("cat ~ car      :", word_match("cat", "car"))

# An n-gram pair matches only if every aligned word pair matches.
print("[cutting air] ~ [cuts air]:", ngram_match(["cutting", "air"], ["cuts", "air"]))
print("[filter for] ~ [filter of]:", ngram_match(["filter", "for"], ["filter", "of"]))

# Paraphrases are tokenized and stripped of determiners first.
gold = strip_determiners(tokenize("a filter for the air"))
test = strip_determiners(tokenize("Filter of air."))
print("gold tokens:", gold)
print("test tokens:", test)

# Overlap sums the best match of every test n-gram. A paraphrase of L
# words scores L(L+1)(L+2)/6 against itself, which is the normalizer.
print("overlap(test, gold) =", overlap_score(test, gold))
print("self_score(gold)    =", self_score(gold))
print("normalized          =", normalized_overlap(test, gold))

# Dropping words is penalized as much as adding them.
for words in [("filter",), ("filter", "for", "air"), ("filter", "for", "clean", "air", "indoors")]:
    print("{:<40} {:.3f}".format(" ".join(words), normalized_overlap(words, gold)))
