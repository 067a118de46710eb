import pytest

import oracles as O

from fintop import enumerate_maps, enumerate_topologies, validate_topology
from fintop.enumeration import default_labels
from fintop.errors import CapExceeded


def as_families(spaces):
    return [frozenset(frozenset(s.labels(o)) for o in s.opens) for s in spaces]


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29)])
def test_counts_match_family_scan(n, count):
    got = as_families(enumerate_topologies(n))
    want = O.topologies_by_family_scan(default_labels(n))
    assert len(got) == len(want) == count
    assert set(got) == set(want)


def test_four_points_match_family_scan():
    got = as_families(enumerate_topologies(4))
    assert len(got) == 355
    assert set(got) == set(O.topologies_by_family_scan(default_labels(4)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_no_duplicates(n):
    fams = as_families(enumerate_topologies(n))
    assert len(fams) == len(set(fams))


def test_order_is_stable():
    first = [s.opens for s in enumerate_topologies(3)]
    assert first == [s.opens for s in enumerate_topologies(3)]
    assert first[0] == (0, 0b111) and len(first[-1]) == 8


def test_custom_labels():
    spaces = list(enumerate_topologies(2, labels=["p", "q"]))
    assert all(s.points == ("p", "q") for s in spaces)


def test_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_topologies(5))


class TestMaps:
    def test_counts(self, example2, sierpinski):
        x, y = example2
        assert sum(1 for _ in enumerate_maps(x, y)) == 27
        assert sum(1 for _ in enumerate_maps(x, y, surjective_only=True)) == 6
        assert sum(1 for _ in enumerate_maps(x, sierpinski, surjective_only=True)) == 6
        assert sum(1 for _ in enumerate_maps(sierpinski, x, surjective_only=True)) == 0

    def test_lexicographic(self, sierpinski):
        tables = [f.table for f in enumerate_maps(sierpinski, sierpinski)]
        assert tables == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_empty_domain(self, sierpinski):
        empty = validate_topology([], [[]])
        assert [f.table for f in enumerate_maps(empty, sierpinski)] == [()]

    def test_cap(self, example2):
        with pytest.raises(CapExceeded):
            next(enumerate_maps(*example2, cap=26))
