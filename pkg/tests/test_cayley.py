from collections import Counter

import pytest

from bhr.cayley import (
    CayleyMultigraph,
    build_from_list,
    difference_list,
    translate_orbit,
    verify_decomposition,
)
from bhr.errors import InvalidLengthError
from bhr.model import EdgeLengthList, PathRealization

SECTION_PATH_11 = PathRealization((0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7))


def test_difference_list_small():
    assert difference_list((0, 1, 2), 5) == Counter({1: 2, 4: 2})


def test_difference_list_of_worked_path():
    diffs = difference_list(SECTION_PATH_11, 11)
    assert sum(diffs.values()) == 20
    expected = Counter({1: 1, 10: 1, 3: 3, 8: 3, 5: 6, 6: 6})
    assert diffs == expected


def test_difference_list_reversal_invariant():
    rev = tuple(reversed(SECTION_PATH_11.vertices))
    assert difference_list(rev, 11) == difference_list(SECTION_PATH_11, 11)


def test_build_from_list_examples():
    g = build_from_list(EdgeLengthList.parse("2^3,4^4"), v=8)
    assert dict(g.connection) == {2: 3, 6: 3, 4: 8}
    assert g.size == 14  # 2(v - 1)

    g = build_from_list(EdgeLengthList.parse("1,3^3,5^6"))
    assert dict(g.connection) == {1: 1, 10: 1, 3: 3, 8: 3, 5: 6, 6: 6}

    g = build_from_list(EdgeLengthList.parse("2"), v=4)
    assert dict(g.connection) == {2: 2}


def test_build_rejects_oversized_length():
    with pytest.raises(InvalidLengthError):
        build_from_list(EdgeLengthList.parse("5"), v=8)


def test_connection_symmetry_enforced():
    with pytest.raises(ValueError):
        CayleyMultigraph(5, ((1, 2), (4, 1)))


def test_edge_multiplicity_convention_self_paired():
    g = build_from_list(EdgeLengthList.parse("2"), v=4)
    assert g.edge_multiplicity(0, 2) == 2
    assert g.edge_multiplicity(1, 3) == 2
    assert g.edge_multiplicity(0, 1) == 0
    # the doubled value is exactly what the translate orbit produces
    assert verify_decomposition(PathRealization((0, 2, 1, 3)))


def test_decomposition_worked_examples():
    assert verify_decomposition(SECTION_PATH_11)
    assert verify_decomposition(PathRealization(tuple(range(6))))
    assert verify_decomposition(PathRealization((0,)))


def test_orbit_size_and_edge_counts():
    orbit = translate_orbit(SECTION_PATH_11)
    assert len(orbit) == 11
    total_edges = sum(len(t) - 1 for t in orbit)
    assert total_edges == 11 * 10
    g = build_from_list(EdgeLengthList.parse("1,3^3,5^6"))
    assert sum(g.edge_multiset().values()) == 11 * g.size // 2


def test_orbit_reindexing_closure():
    orbit = {tuple(t) for t in translate_orbit(SECTION_PATH_11)}
    v = 11
    shifted = {tuple((x + 4) % v for x in t) for t in orbit}
    assert shifted == orbit
