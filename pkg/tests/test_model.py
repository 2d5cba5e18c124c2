import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhr.errors import InvalidEdgeError, OrderMismatchError, ParseError
from bhr.model import (
    EdgeLengthList,
    PathRealization,
    cyclic_lengths,
    edge_length,
    is_perfect,
    linear_lengths,
    validate,
)

SECTION_PATH_11 = PathRealization((0, 3, 8, 2, 5, 10, 4, 9, 1, 6, 7))
SECTION_PATH_13 = PathRealization((0, 5, 3, 1, 6, 9, 4, 2, 7, 12, 10, 11, 8))
DUAL_PATH_7 = PathRealization((0, 2, 3, 5, 4, 1, 6))


@pytest.mark.parametrize(
    "x,y,v,expected",
    [(8, 2, 11, 5), (6, 7, 11, 1), (0, 4, 8, 4)],
)
def test_edge_length_examples(x, y, v, expected):
    assert edge_length(x, y, v) == expected


@pytest.mark.parametrize("x,y,v", [(3, 3, 7), (0, 9, 8), (-1, 2, 5)])
def test_edge_length_rejects_bad_pairs(x, y, v):
    with pytest.raises(InvalidEdgeError):
        edge_length(x, y, v)


def test_cyclic_lengths_worked_examples():
    assert cyclic_lengths(SECTION_PATH_11) == EdgeLengthList.parse("1,3^3,5^6")
    assert cyclic_lengths(DUAL_PATH_7) == EdgeLengthList.parse("1^2,2^3,3")
    assert cyclic_lengths(PathRealization((0, 1))) == EdgeLengthList.parse("1")


def test_linear_lengths_worked_examples():
    assert linear_lengths(SECTION_PATH_13) == EdgeLengthList.parse("1,2^4,3^2,5^5")
    assert linear_lengths(DUAL_PATH_7) == EdgeLengthList.parse("1^2,2^2,3,5")
    assert linear_lengths(PathRealization(tuple(range(6)))) == EdgeLengthList.parse("1^5")


def test_is_perfect():
    assert is_perfect(PathRealization((0, 1, 2)))
    assert is_perfect(DUAL_PATH_7)  # ends at 6 = v - 1
    assert not is_perfect(SECTION_PATH_13)  # ends at 8, not 12


def test_validate_worked_examples():
    assert validate(SECTION_PATH_11, EdgeLengthList.parse("1,3^3,5^6"), "cyclic").passed
    report = validate(PathRealization((0, 1, 2)), EdgeLengthList.parse("2^2"), "linear")
    assert not report.passed
    assert report.mismatch == (1, 0, 2)  # length 1 surplus
    report = validate(DUAL_PATH_7, EdgeLengthList.parse("1^2,2^2,3,5"), "linear")
    assert report.passed and report.perfect


def test_validate_order_mismatch():
    with pytest.raises(OrderMismatchError):
        validate(PathRealization((0, 1, 2)), EdgeLengthList.parse("1^5"), "linear")


def test_degenerate_orders():
    single = PathRealization((0,))
    assert linear_lengths(single) == EdgeLengthList(())
    assert cyclic_lengths(single) == EdgeLengthList(())
    assert EdgeLengthList(()).order == 1
    with pytest.raises(ValueError):
        PathRealization(())


def test_paths_must_start_at_zero():
    with pytest.raises(ValueError):
        PathRealization((1, 0, 2))
    with pytest.raises(ValueError):
        PathRealization((0, 2, 3))  # not a permutation


def test_list_text_round_trip():
    for text in ("1,3^3,5^6", "2^3,4^4", "1", "-"):
        assert EdgeLengthList.parse(text).format() == text
    # duplicate terms are summed, whitespace ignored, ^1 omissible
    assert EdgeLengthList.parse(" 3, 3 ,5^1") == EdgeLengthList.parse("3^2,5")
    with pytest.raises(ParseError):
        EdgeLengthList.parse("1,,2")
    with pytest.raises(ParseError):
        EdgeLengthList.parse("0^3")


def test_path_text_round_trip():
    text = "[0,3,8,2,5,10,4,9,1,6,7]"
    assert PathRealization.parse(text).format() == text
    with pytest.raises(ParseError):
        PathRealization.parse("0,1,2")
    with pytest.raises(ParseError):
        PathRealization.parse("[1,0]")


def test_list_derived_quantities():
    lst = EdgeLengthList.parse("1,3^3,5^6")
    assert lst.order == 11
    assert lst.support == (1, 3, 5)
    assert lst.cyclic_admissible
    assert not EdgeLengthList.parse("1^2,2^2,3,5").cyclic_admissible  # 5 > 3
    assert lst.abcd() == (1, 0, 3, 6)
    with pytest.raises(ValueError):
        EdgeLengthList.parse("4^2").abcd()


def test_list_multiset_sum():
    a = EdgeLengthList.parse("1,2^2")
    b = EdgeLengthList.parse("2,5")
    assert a + b == EdgeLengthList.parse("1,2^3,5")


@st.composite
def paths(draw, max_v=12):
    v = draw(st.integers(min_value=2, max_value=max_v))
    rest = draw(st.permutations(list(range(1, v))))
    return PathRealization((0, *rest))


@given(paths(), st.data())
def test_edge_length_symmetry_and_range(p, data):
    v = p.order
    x = data.draw(st.integers(min_value=0, max_value=v - 1))
    y = data.draw(st.integers(min_value=0, max_value=v - 1))
    if x == y:
        y = (y + 1) % v
    assert edge_length(x, y, v) == edge_length(y, x, v)
    assert 1 <= edge_length(x, y, v) <= v // 2
    assert all(l <= v - 1 for l in linear_lengths(p).support)


@given(paths())
def test_bridge_between_interpretations(p):
    # when every linear difference is at most floor(v/2), both length
    # multisets coincide
    linear = linear_lengths(p)
    if all(l <= p.order // 2 for l in linear.support):
        assert cyclic_lengths(p) == linear


@given(paths())
def test_reversal_complement_preserves_differences(p):
    last = p.vertices[-1]
    mirrored = [last - y for y in reversed(p.vertices)]
    diffs = sorted(abs(x - y) for x, y in zip(mirrored, mirrored[1:]))
    assert diffs == sorted(linear_lengths(p).elements())
    assert mirrored[0] == 0
