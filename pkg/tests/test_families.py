import pytest

from bhr.errors import TemplateDefectError
from bhr.families import (
    AffineExpr,
    Run,
    format_catalog,
    load_catalog,
    parse_catalog,
    staircase,
)
from bhr.model import EdgeLengthList, PathRealization, linear_lengths, is_perfect, validate


def test_affine_expr_parse_format():
    for text in ("5k+2", "3t", "k", "7", "0", "2t+11"):
        letter = next((ch for ch in text if ch.isalpha()), "k")
        assert AffineExpr.parse(text).format(letter) == text
    assert AffineExpr.parse("5k+3")(2) == 13
    assert AffineExpr.of(4) == AffineExpr(0, 4)


def test_run_expansion():
    run = Run(AffineExpr.parse("3"), AffineExpr.parse("5k+3"), 5)
    assert run.expand(0) == [3]
    assert run.expand(2) == [3, 8, 13]
    down = Run(AffineExpr.parse("5k+6"), AffineExpr.parse("1"), -5)
    assert down.expand(1) == [11, 6, 1]
    with pytest.raises(TemplateDefectError):
        Run(AffineExpr.parse("0"), AffineExpr.parse("4"), 3).expand(0)


def test_first_perfect_template_instantiation():
    catalog = load_catalog()
    (template,) = catalog.lookup((0, 0, 6, AffineExpr(5, 2)), kind="perfect")
    assert template.instantiate(0) == PathRealization((0, 3, 6, 1, 4, 7, 2, 5, 8))
    p1 = template.instantiate(1)
    assert p1 == PathRealization((0, 3, 8, 11, 6, 1, 4, 9, 12, 7, 2, 5, 10, 13))
    assert linear_lengths(p1) == EdgeLengthList.parse("3^6,5^7")
    assert is_perfect(p1)


def test_cyclic_template_instantiation():
    catalog = load_catalog()
    matches = catalog.match_concrete(0, 1, 7, 1, kind="cyclic")
    assert matches, "expected the single-2 family to cover {2,3^7,5}"
    template, param = matches[0]
    path = template.instantiate(param)
    assert path.vertices[:5] == (0, 3, 6, 9, 1)
    assert validate(path, EdgeLengthList.parse("2,3^7,5"), "cyclic").passed


def test_catalog_lookup_patterns():
    catalog = load_catalog()
    rows = catalog.lookup((0, 4, 0, AffineExpr(5, 3)), kind="perfect")
    assert len(rows) == 1
    assert catalog.lookup((9, 9, 9, 9)) == ()
    assert len(catalog.lookup((0, 0, 6, AffineExpr(5, 2)))) == 1


def test_catalog_match_concrete_respects_range():
    catalog = load_catalog()
    # d = 5k+8 at k = -1 must not match
    assert not any(
        t.id.startswith("c:0.1.1")
        for t, _ in catalog.match_concrete(0, 1, 1, 3, kind="cyclic")
    )


def test_staircase_examples():
    assert staircase(3, 1) == PathRealization((0, 3, 4, 1, 2, 5))
    assert staircase(5, 1) == PathRealization((0, 5, 6, 1, 2, 7, 8, 3, 4, 9))
    p = staircase(3, 2)
    assert p.order == 9 and is_perfect(p)
    assert linear_lengths(p) == EdgeLengthList.parse("1^2,3^6")
    assert linear_lengths(staircase(3, 1)) == EdgeLengthList.parse("1^2,3^3")
    assert linear_lengths(staircase(5, 1)) == EdgeLengthList.parse("1^4,5^5")


def test_staircase_rejects_even_or_small():
    with pytest.raises(ValueError):
        staircase(4, 1)
    with pytest.raises(ValueError):
        staircase(3, 0)
    with pytest.raises(ValueError):
        staircase(1, 2)


def test_soundness_sweep_clean_small_range():
    report = load_catalog().soundness_sweep(range(0, 4))
    assert all(e.ok for e in report)


def test_catalog_round_trip_byte_stable():
    from importlib import resources

    text = resources.files("bhr.data").joinpath("catalog.txt").read_text("ascii")
    assert format_catalog(parse_catalog(text)) == text


def test_search_derived_constants_marked():
    catalog = load_catalog()
    frozen = [t for t in catalog.templates if t.provenance == "search"]
    assert len(frozen) == 6
    assert all(not t.parametric for t in frozen)


def test_out_of_range_params_rejected():
    catalog = load_catalog()
    (template,) = catalog.lookup((0, 0, 6, AffineExpr(5, 2)), kind="perfect")
    with pytest.raises(ValueError):
        template.instantiate(-1)
