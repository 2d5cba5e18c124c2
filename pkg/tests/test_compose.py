import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhr.compose import compose, extend_with_ones, ones_path, translate
from bhr.errors import CompositionError, InvalidTargetError
from bhr.model import (
    EdgeLengthList,
    PathRealization,
    cyclic_lengths,
    is_perfect,
    linear_lengths,
)

# a small pool of realizations to draw composition operands from
PERFECT_POOL = [
    ones_path(1),
    ones_path(3),
    PathRealization((0, 3, 1, 4, 2, 5)),       # {2^2,3^3}
    PathRealization((0, 2, 4, 1, 3, 5)),       # {2^4,3}
    PathRealization((0, 5, 2, 7, 4, 1, 6, 3, 8)),  # {3^4,5^4}
    PathRealization((0, 2, 3, 5, 4, 1, 6)),    # {1^2,2^2,3,5}
]
ANY_POOL = PERFECT_POOL + [
    PathRealization((0, 2, 1, 3)),
    PathRealization((0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8)),
    PathRealization((0,)),
]


def test_compose_worked_examples():
    out = compose(PathRealization((0, 1, 2)), PathRealization((0, 2, 1, 3)))
    assert out == PathRealization((0, 1, 2, 4, 3, 5))
    assert linear_lengths(out) == EdgeLengthList.parse("1^3,2^2")

    r1 = PathRealization((0, 3, 1, 4, 2, 5))
    assert compose(r1, PathRealization((0,))) == r1

    out = compose(PathRealization((0, 3, 6, 1, 4, 7, 2, 5, 8)), ones_path(1))
    assert linear_lengths(out) == EdgeLengthList.parse("1,3^6,5^2")


def test_compose_requires_perfect_left():
    with pytest.raises(CompositionError):
        compose(PathRealization((0, 2, 3, 1)), ones_path(1))


def test_extend_with_ones_examples():
    # [0,2,1,3] carries one 1; raising the ones-count to 3 prefixes two
    assert extend_with_ones(PathRealization((0, 2, 1, 3)), 3) == \
        PathRealization((0, 1, 2, 4, 3, 5))
    r = PathRealization((0, 2, 1, 3))
    assert extend_with_ones(r, 1) is r
    big = extend_with_ones(
        PathRealization((0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8)), 3
    )
    assert big.order == 15
    assert linear_lengths(big) == EdgeLengthList.parse("1^3,2^4,3^2,5^5")
    with pytest.raises(InvalidTargetError):
        extend_with_ones(r, -1)


def test_translate_examples():
    p = PathRealization((0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7))
    assert translate(p, 0) == p.vertices
    assert translate(p, 1) == (1, 4, 9, 3, 6, 0, 5, 10, 2, 7, 8)


@given(st.sampled_from(PERFECT_POOL), st.sampled_from(ANY_POOL))
def test_multiset_additivity(r1, r2):
    out = compose(r1, r2)
    assert linear_lengths(out) == linear_lengths(r1) + linear_lengths(r2)
    assert out.order == r1.order + r2.order - 1
    assert is_perfect(out) == is_perfect(r2)


@given(
    st.sampled_from([p for p in PERFECT_POOL]),
    st.sampled_from([p for p in PERFECT_POOL]),
    st.sampled_from(ANY_POOL),
)
def test_associativity_on_perfect_chains(r1, r2, r3):
    assert compose(compose(r1, r2), r3) == compose(r1, compose(r2, r3))


@given(st.sampled_from(ANY_POOL), st.data())
def test_translation_preserves_cyclic_lengths(p, data):
    v = p.order
    g = data.draw(st.integers(min_value=0, max_value=v - 1))
    h = data.draw(st.integers(min_value=0, max_value=v - 1))
    shifted = translate(p, g)
    diffs = EdgeLengthList.from_lengths(
        min(abs(x - y), v - abs(x - y)) for x, y in zip(shifted, shifted[1:])
    )
    assert diffs == cyclic_lengths(p)
    twice = tuple((x + h) % v for x in shifted)
    assert twice == tuple((x + (g + h) % v) % v for x in p.vertices)


def test_no_cyclic_composition_analogue():
    # concatenation can change the cyclic multiset: a concrete witness
    r1 = PathRealization((0, 1, 2))
    r2 = PathRealization((0, 2, 1))
    assert cyclic_lengths(r1) == EdgeLengthList.parse("1^2")
    assert cyclic_lengths(r2) == EdgeLengthList.parse("1^2")  # on v = 3
    out = compose(r1, r2)
    assert cyclic_lengths(out) != cyclic_lengths(r1) + cyclic_lengths(r2)
