import json

import pytest

from bhr.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_counterexample(capsys):
    code, out, _ = run(capsys, "check", "--v", "8", "--list", "2^3,4^4")
    assert code == 3
    assert "divisor 2" in out


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", "--list", "1,3^3,5^6")
    assert code == 0


def test_check_order_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--v", "9", "--list", "2^3,4^4")
    assert code == 2 and "derived order" in err


def test_realize_cyclic(capsys):
    code, out, _ = run(capsys, "realize", "--list", "1,3^3,5^6")
    assert code == 0
    assert "witness [0," in out


def test_realize_negative(capsys):
    code, out, _ = run(capsys, "realize", "--list", "5^9")
    assert code == 3
    assert "divisor" in out


def test_realize_linear_exception(capsys):
    code, out, _ = run(capsys, "realize", "--list", "1,3^3,5", "--mode", "linear")
    assert code == 3


def test_verify_worked_example(capsys):
    code, out, _ = run(
        capsys, "verify", "--list", "1^2,2^2,3,5",
        "--path", "[0,2,3,5,4,1,6]", "--mode", "linear",
    )
    assert code == 0
    assert "perfect" in out


def test_verify_failure(capsys):
    code, out, _ = run(
        capsys, "verify", "--list", "2^2", "--path", "[0,1,2]", "--mode", "linear",
    )
    assert code == 3
    assert "length 1" in out


def test_oracle_and_count(capsys):
    code, out, _ = run(capsys, "oracle", "--list", "2^4", "--mode", "linear")
    assert code == 3 and "exhausted" in out
    code, out, _ = run(
        capsys, "oracle", "--list", "1^2,2^2,3,5", "--mode", "linear", "--count",
    )
    assert code == 0 and "17" in out


def test_sweep_text(capsys):
    code, out, _ = run(capsys, "sweep", "--v", "7")
    assert code == 0
    assert "28 lists" in out and "0 violations" not in out or "violations" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--path", "[0,3,8,2,5,10,4,9,1,6,7]")
    assert code == 0
    assert "verified" in out


def test_catalog_sweep(capsys):
    code, out, _ = run(capsys, "catalog", "--max-param", "2")
    assert code == 0
    assert "all templates validate" in out


def test_malformed_list_is_usage_error(capsys):
    code, _, err = run(capsys, "realize", "--list", "1,,2")
    assert code == 2
    assert "position" in err


def test_record_output_round_trips(capsys):
    code, out, _ = run(
        capsys, "realize", "--list", "1,3^3,5^6", "--output", "record",
    )
    assert code == 0
    record = json.loads(out)
    assert record["schema"] == 1
    assert record["status"] == "realizable"
    # machine fields parse back through the text parsers
    from bhr.model import EdgeLengthList, PathRealization, validate

    lst = EdgeLengthList.parse(record["list"])
    path = PathRealization.parse(record["witness"])
    assert validate(path, lst, record["mode"]).passed


def test_record_output_deterministic(capsys):
    code1, out1, _ = run(capsys, "realize", "--list", "2,3^7,5", "--output", "record")
    code2, out2, _ = run(capsys, "realize", "--list", "2,3^7,5", "--output", "record")
    assert (code1, out1) == (code2, out2)
