import pytest

from ncpara import Compound, GoldEntry, GoldList
from ncpara.baseline import NAIVE_TEMPLATES, linking_phrase, naive_baseline, ranked_templates, trained_baseline
from ncpara.errors import EmptyInputError
from ncpara.gold import validate_paraphrase

AF = Compound("air", "filter")
COMPOUNDS = [AF, Compound("work", "area"), Compound("body", "armor"), Compound("tea", "cup")]


def test_naive_air_filter():
    assert naive_baseline(AF) == [
        "filter of air", "filter in air", "filter for air", "filter with air", "filter on air",
        "filter about air", "filter has air", "filter to air", "filter used for air", "filter used in air"]


def test_naive_work_area():
    assert naive_baseline(Compound("work", "area"))[0] == "area of work"


@pytest.mark.parametrize("c", COMPOUNDS)
def test_naive_properties(c):
    out = naive_baseline(c)
    assert len(out) == 10
    assert all(validate_paraphrase(c, p).valid for p in out)
    assert [p.replace(c.head, "H", 1).rsplit(c.modifier, 1)[0] + "M" for p in out] == \
           ["H {} M".format(t) for t in NAIVE_TEMPLATES]


def training():
    x = Compound("kitchen", "knife")
    return [GoldList(x, [GoldEntry("knife of kitchen", 0, 3), GoldEntry("knife for kitchen", 1, 1),
                         GoldEntry("sharp knife", 1, 1)])]


def test_trained_top_template():
    assert trained_baseline(training(), AF, 1) == ["filter of air"]


def test_trained_k_larger_than_inventory():
    assert trained_baseline(training(), AF, 10) == ["filter of air", "filter for air"]


def test_trained_empty():
    with pytest.raises(EmptyInputError):
        trained_baseline([], AF, 3)


def test_trained_ordering_and_ties():
    x, y = Compound("kitchen", "knife"), Compound("tea", "cup")
    tr = [GoldList(x, [GoldEntry("knife in the kitchen", 0, 2), GoldEntry("knife for kitchen", 1, 1)]),
          GoldList(y, [GoldEntry("cup for tea", 0, 1), GoldEntry("cup with tea", 0, 1), GoldEntry("cups of tea", 0, 1)])]
    assert ranked_templates(tr) == ["for", "in the", "of", "with"]
    out = trained_baseline(tr, AF, 4)
    assert all(validate_paraphrase(AF, p).valid for p in out)


def test_linking_phrase():
    assert linking_phrase(AF, "a filter that cleans the air") == "that cleans the"
    assert linking_phrase(AF, "air in the filter") is None
    assert linking_phrase(AF, "filter air") is None
