import itertools
import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhr.conditions import condition_one, condition_two, divisors, residue_components
from bhr.errors import InvalidDivisorError
from bhr.model import EdgeLengthList, PathRealization, cyclic_lengths


def test_divisor_form_counterexample_list():
    report = condition_two(EdgeLengthList.parse("2^3,4^4"))  # v = 8
    assert not report.holds
    assert report.divisor == 2 and report.multiple_count == 7


def test_divisor_form_all_ones_holds():
    for v in (2, 5, 9, 16):
        assert condition_two(EdgeLengthList.from_counts({1: v - 1})).holds


def test_divisor_form_single_divisor_failure():
    report = condition_two(EdgeLengthList.parse("2^5"))  # v = 6
    assert not report.holds and report.divisor == 2 and report.multiple_count == 5


def test_sublist_form_counterexample_list():
    report = condition_one(EdgeLengthList.parse("2^3,4^4"))
    assert not report.holds
    assert report.gcd_value == 2
    assert len(report.sublist) < report.gcd_value - 1


def test_sublist_form_trivial_cases():
    # prime order: always satisfied
    for counts in ({1: 2, 3: 4}, {2: 6}, {1: 1, 2: 1, 3: 8}):
        lst = EdgeLengthList.from_counts(counts)
        if lst.order in (7, 11, 13):
            assert condition_one(lst).holds
    assert condition_one(EdgeLengthList.from_counts({1: 9})).holds


def _all_lists(v):
    t = v // 2
    for counts in itertools.combinations_with_replacement(range(1, t + 1), v - 1):
        yield EdgeLengthList.from_lengths(counts)


@pytest.mark.parametrize("v", range(2, 11))
def test_equivalence_exhaustive_small(v):
    for lst in _all_lists(v):
        assert condition_one(lst).holds == condition_two(lst).holds, lst


@given(st.integers(min_value=2, max_value=40), st.data())
def test_equivalence_random_lists(v, data):
    lengths = data.draw(
        st.lists(st.integers(min_value=1, max_value=max(1, v // 2)),
                 min_size=v - 1, max_size=v - 1)
    )
    lst = EdgeLengthList.from_lengths(lengths)
    assert condition_one(lst).holds == condition_two(lst).holds


def test_necessity_on_random_paths():
    rng = random.Random(20250809)
    for _ in range(300):
        v = rng.randint(2, 40)
        rest = list(range(1, v))
        rng.shuffle(rest)
        p = PathRealization((0, *rest))
        assert condition_two(cyclic_lengths(p)).holds


@pytest.mark.parametrize(
    "p,d,expected",
    [
        (PathRealization(tuple(range(8))), 2, 8),
        (PathRealization((0, 2, 4, 6, 1, 3, 5, 7)), 2, 2),
        (PathRealization((0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7)), 1, 1),
    ],
)
def test_residue_components_examples(p, d, expected):
    assert residue_components(p, d) == expected


def test_residue_components_rejects_non_divisor():
    with pytest.raises(InvalidDivisorError):
        residue_components(PathRealization((0, 1, 2)), 2)


def test_residue_component_count_matches_deleted_edges():
    rng = random.Random(7)
    for _ in range(200):
        v = rng.randint(2, 36)
        rest = list(range(1, v))
        rng.shuffle(rest)
        p = PathRealization((0, *rest))
        lengths = list(cyclic_lengths(p).elements())
        for d in divisors(v):
            n = sum(1 for l in lengths if l % d != 0)
            assert residue_components(p, d) == n + 1
            assert n >= d - 1


def _incorrect_gcd_count_variant(lst: EdgeLengthList) -> bool:
    # the known-broken variant: bound the lengths with gcd(l, v) = d instead
    # of the multiples of d; kept as a fixture only, to pin the discrepancy
    v = lst.order
    for d in divisors(v):
        count = sum(m for l, m in lst.pairs if gcd(l, v) == d)
        if count > v - d:
            return False
    return True


def test_incorrect_variant_accepts_the_counterexample_list():
    lst = EdgeLengthList.parse("2^3,4^4")
    assert _incorrect_gcd_count_variant(lst)
    assert not condition_two(lst).holds
