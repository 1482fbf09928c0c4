import pytest

import fcperm
from fcperm import Permutation


def perm(text):
    return Permutation.parse(text)


def test_tableaux_and_cores():
    assert fcperm.rsk(perm("41627385"))["p"] == [[1, 2, 3, 5], [4, 6, 7, 8]]
    assert fcperm.row2(perm("41623785")) == [4, 6, 7]
    assert str(fcperm.boolean_core(perm("345619278"))["core"]) == "314569278"
    assert fcperm.boolean_core(perm("41627385"))["core"] == perm("41263785")


def test_classification():
    assert fcperm.is_crowded(perm("41627385"))
    assert not fcperm.is_crowded(perm("41623785"))
    assert fcperm.is_minimal_crowded(perm("41627385"))
    assert fcperm.find_crowded_window([4, 6, 7, 8]) == {"x": 1, "y": 6, "window": [6, 7, 8]}
    assert fcperm.is_uncrowded_set([3, 5, 6])
    assert fcperm.minimal_crowded_subset([4, 6, 7, 8]) == [6, 7, 8]


def test_words_and_heaps():
    assert len(fcperm.reduced_words(perm("4321"))) == 16
    ext = fcperm.linear_extensions([8, 7, 2, 3, 4, 5, 6, 1, 2, 3, 4])
    assert [2, 3, 4, 5, 1, 2, 3, 4, 8, 7, 6] in ext
    assert str(fcperm.evaluate_word([3, 2, 1, 5, 4, 6, 7, 3, 5], 8)) == "41627385"
    assert fcperm.heap_dot([1]).count("->") == 0


def test_analyze_and_transition():
    report = fcperm.analyze("41627385")
    assert report["classification"] == "crowded"
    assert report["witness"]["window"] == [6, 7, 8]
    assert report["minimal_crowded"]["minimal"]
    t = fcperm.analyze_transition("41623785", 5)
    assert (t["M"], t["m"], t["e"], t["r"]) == (6, 5, 8, 0)


def test_enumeration_and_checks():
    assert len(fcperm.enumerate(5, "fc")) == 42
    assert perm("41627385") in fcperm.enumerate(8, "minimal-crowded")
    assert len(fcperm.poset(4)["nodes"]) == 14
    assert "thm-5.10" in fcperm.available_checks()
    assert fcperm.run_check("thm-4.11", 7)["passed"]


def test_errors():
    with pytest.raises(ValueError, match="bad token"):
        perm("41x2")
    with pytest.raises(ValueError):
        fcperm.boolean_core(perm("321"))
    with pytest.raises(fcperm.LimitExceeded):
        fcperm.enumerate(10)
