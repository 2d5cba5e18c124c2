import itertools

import pytest

from bhr.errors import CapExceededError
from bhr.model import EdgeLengthList, validate
from bhr.oracle import (
    certificates,
    compositions,
    count_realizations,
    search,
    search_unnormalized,
    sweep_conjecture,
)


def test_parity_locked_list_is_exhausted():
    out = search(EdgeLengthList.parse("2^4"), "linear")
    assert out.found is None and out.exhausted
    assert out.certificate in certificates()


def test_witnessed_list_is_found_and_validates():
    lst = EdgeLengthList.parse("1,2^4,3^2,5^5")
    out = search(lst, "linear")
    assert out.found is not None
    assert validate(out.found, lst, "linear").passed


def test_known_exception_is_exhausted_at_small_order():
    out = search(EdgeLengthList.parse("1,3^3,5"), "linear")
    assert out.found is None and out.exhausted


def test_search_is_deterministic():
    lst = EdgeLengthList.parse("1^2,2^2,3,5")
    a = search(lst, "linear", use_memo=False)
    b = search(lst, "linear", use_memo=False)
    assert a.found == b.found and a.nodes == b.nodes


def test_budget_exhaustion_is_not_a_proof():
    out = search(EdgeLengthList.parse("2^3,3^24"), "linear", budget=5, use_memo=False)
    assert out.found is None and not out.exhausted


def test_perfect_mode_restricts_terminal():
    out = search(EdgeLengthList.parse("2^2,3^2"), "linear", perfect=True)
    assert out.found is None and out.exhausted
    out = search(EdgeLengthList.parse("2^2,3^3"), "linear", perfect=True)
    assert out.found is not None and out.found.terminal == out.found.order - 1


def test_count_realizations_examples():
    assert count_realizations(EdgeLengthList.parse("1^3"), "linear") == 1
    assert count_realizations(EdgeLengthList.parse("2^4"), "linear") == 0
    # frozen on first run; regression value for the searcher
    assert count_realizations(EdgeLengthList.parse("1^2,2^2,3,5"), "linear") == 17


def test_count_cap_refused():
    with pytest.raises(CapExceededError):
        count_realizations(EdgeLengthList.from_counts({1: 20}), "linear")


def test_normalization_audit_small_orders():
    # 0-first search finds a witness exactly when some witness has 0 or
    # v-1 at an end (reversal and complement closure); cyclic mode admits
    # every witness through rotation
    for v in range(2, 8):
        for counts in itertools.combinations_with_replacement(range(1, v), v - 1):
            lst = EdgeLengthList.from_lengths(counts)
            for mode in ("linear", "cyclic"):
                norm = search(lst, mode, budget=10**6)
                raw, raw_exh, _ = search_unnormalized(lst, mode, budget=10**6)
                assert norm.decided and (raw is not None or raw_exh)
                if mode == "cyclic":
                    assert (norm.found is not None) == (raw is not None)
                elif norm.found is not None:
                    assert raw is not None


def test_normalization_divergence_witness():
    # {3^4, 5^2} on 7 vertices: realizable from vertex 2 but all pair
    # candidates force vertex 0 into the interior, so no 0-first witness
    lst = EdgeLengthList.parse("3^4,5^2")
    assert search(lst, "linear").found is None
    assert search(lst, "linear").exhausted
    raw, _, _ = search_unnormalized(lst, "linear")
    assert raw is not None


def test_compositions_lexicographic():
    out = list(compositions(3, 2))
    assert out == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert len(list(compositions(4, 2))) == 5


def test_sweep_small_orders():
    rep5 = sweep_conjecture(5)
    assert rep5.total == 5 and not rep5.violations and not rep5.inconclusive
    rep7 = sweep_conjecture(7)
    assert rep7.total == 28 and rep7.realizable == 28 and not rep7.violations


def test_sweep_checkpoint_resume(tmp_path):
    path = str(tmp_path / "sweep.txt")
    first = sweep_conjecture(8, checkpoint_path=path)
    resumed = sweep_conjecture(8, checkpoint_path=path)
    assert first.total == resumed.total == 120
    assert first.realizable == resumed.realizable
    assert resumed.nodes == first.nodes  # entries came from the checkpoint


def test_sweep_cap_refused():
    with pytest.raises(CapExceededError):
        sweep_conjecture(20)
