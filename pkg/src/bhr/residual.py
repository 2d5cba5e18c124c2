"""Frozen linear-realizability decisions for zones outside the tables.

Each entry was settled by a full exhaustive search (see the oracle
module); True marks a witnessed list, False an enumeration-certified
nonexistence.  Regenerate by re-running the searches; the acceptance
suite re-verifies every small-order entry against the oracle.
"""

RESIDUAL_LINEAR: dict[tuple[int, int, int, int], bool] = {
    (0, 0, 0, 1): False,
    (0, 0, 0, 2): False,
    (0, 0, 0, 3): False,
    (0, 0, 1, 2): False,
    (0, 0, 4, 2): False,
    (0, 0, 4, 3): True,
    (0, 0, 4, 4): True,
    (0, 0, 4, 5): False,
    (0, 0, 4, 6): False,
    (0, 0, 4, 7): False,
    (0, 0, 4, 8): False,
    (0, 0, 4, 9): False,
    (0, 0, 5, 2): True,
    (0, 0, 5, 3): True,
    (0, 0, 5, 4): True,
    (0, 0, 5, 5): False,
    (0, 0, 5, 6): False,
    (0, 0, 5, 7): True,
    (0, 0, 5, 8): True,
    (0, 0, 6, 2): True,
    (0, 0, 6, 3): True,
    (0, 0, 6, 4): False,
    (0, 0, 6, 5): False,
    (0, 0, 6, 6): True,
    (0, 0, 6, 7): True,
    (0, 0, 7, 2): False,
    (0, 0, 7, 3): False,
    (0, 0, 7, 4): False,
    (0, 0, 7, 5): False,
    (0, 0, 7, 6): True,
    (0, 0, 8, 2): False,
    (0, 0, 8, 3): False,
    (0, 0, 8, 4): False,
    (0, 0, 8, 5): False,
    (0, 0, 9, 2): False,
    (0, 0, 9, 3): False,
    (0, 0, 9, 4): False,
    (0, 0, 10, 2): False,
    (0, 0, 10, 3): False,
    (0, 0, 11, 2): False,
    (0, 1, 0, 1): False,
    (0, 1, 0, 2): False,
    (0, 1, 1, 1): False,
    (0, 1, 3, 1): False,
    (0, 1, 3, 2): True,
    (0, 1, 3, 3): True,
    (0, 1, 4, 1): True,
    (0, 1, 4, 2): True,
    (0, 1, 4, 3): True,
    (0, 1, 4, 4): True,
    (0, 1, 4, 6): True,
    (0, 1, 4, 10): True,
    (0, 1, 5, 1): True,
    (0, 1, 5, 2): True,
    (0, 1, 5, 3): True,
    (0, 1, 5, 5): True,
    (0, 1, 5, 6): True,
    (0, 1, 6, 1): True,
    (0, 1, 6, 2): False,
    (0, 1, 6, 3): False,
    (0, 1, 6, 6): True,
    (0, 1, 7, 1): False,
    (0, 1, 7, 2): False,
    (0, 1, 7, 3): True,
    (0, 1, 7, 4): True,
    (0, 1, 8, 1): False,
    (0, 1, 8, 2): False,
    (0, 1, 8, 3): True,
    (0, 1, 9, 1): False,
    (0, 1, 9, 2): False,
    (0, 1, 9, 3): True,
    (0, 1, 10, 1): False,
    (0, 1, 10, 2): False,
    (0, 1, 11, 1): False,
    (0, 2, 0, 1): False,
    (0, 2, 2, 2): True,
    (0, 2, 3, 1): True,
    (0, 2, 3, 2): True,
    (0, 2, 3, 8): False,
    (0, 2, 4, 1): True,
    (0, 2, 4, 2): True,
    (0, 2, 5, 1): True,
    (0, 2, 5, 2): True,
    (0, 2, 6, 1): True,
    (0, 2, 6, 2): True,
    (0, 2, 7, 1): False,
    (0, 2, 7, 2): True,
    (0, 2, 8, 1): False,
    (0, 2, 8, 2): True,
    (0, 2, 9, 1): True,
    (0, 2, 9, 2): True,
    (0, 2, 10, 1): True,
    (0, 4, 0, 4): True,
    (0, 4, 0, 5): False,
    (0, 4, 0, 6): True,
    (0, 4, 0, 7): True,
    (0, 4, 0, 8): True,
    (0, 4, 0, 9): True,
    (0, 5, 0, 4): False,
    (0, 5, 0, 5): True,
    (0, 5, 0, 7): True,
    (0, 5, 0, 8): True,
    (0, 6, 0, 4): True,
    (0, 6, 0, 5): True,
    (0, 6, 0, 7): True,
    (0, 7, 0, 4): False,
    (0, 7, 0, 5): True,
    (0, 8, 0, 4): True,
    (0, 9, 0, 4): True,
}
