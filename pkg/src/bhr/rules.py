"""Composition recursion rules for {1^a, 2^b, 3^c, 5^d} constructions.

Each rule splits a target list into a perfect left block and a smaller
remainder; the engine realizes both recursively and concatenates.  Rules
are tried in order, the remainder is strictly smaller than the target, and
the engine asserts exponent additivity on application, so a transcription
slip surfaces as a skipped rule rather than a wrong witness.

Rule ids name the zone and the peeled block, e.g. ``d1.b5`` is the d=1,
b=5 zone (peeling a perfect {2^2,3^3}).  ``right_perfect`` marks splits
whose remainder is itself realized perfectly, making the result perfect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

__all__ = ["Rule", "RULES"]

Quad = tuple[int, int, int, int]


@dataclass(frozen=True, slots=True)
class Rule:
    id: str
    guard: Callable[[int, int, int, int], bool]
    left: Callable[[int, int, int, int], Quad]
    right: Callable[[int, int, int, int], Quad]
    right_perfect: bool = False


def _r(rid, guard, left, right, right_perfect=False) -> Rule:
    return Rule(rid, guard, left, right, right_perfect)


RULES: tuple[Rule, ...] = (
    # ---- single 5 (d = 1), no ones ----
    _r("d1.b5", lambda a, b, c, d: a == 0 and d == 1 and b == 5 and c >= 4,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 3, c - 3, 1)),
    _r("d1.b6c3", lambda a, b, c, d: a == 0 and d == 1 and b >= 6 and c == 3,
       lambda a, b, c, d: (0, 4, 1, 0), lambda a, b, c, d: (0, b - 4, 2, 1)),
    _r("d1.b6c4", lambda a, b, c, d: a == 0 and d == 1 and b >= 6 and c == 4,
       lambda a, b, c, d: (0, 4, 2, 0), lambda a, b, c, d: (0, b - 4, 2, 1)),
    _r("d1.b6c5", lambda a, b, c, d: a == 0 and d == 1 and b >= 6 and c == 5,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, b - 2, 2, 1)),
    _r("d1.b6c6", lambda a, b, c, d: a == 0 and d == 1 and b >= 6 and c >= 6,
       lambda a, b, c, d: (0, 2, 3, 1), lambda a, b, c, d: (0, b - 2, c - 3, 0)),
    # ---- double 5 (d = 2), no ones ----
    _r("d2.b58", lambda a, b, c, d: a == 0 and d == 2 and 5 <= b <= 8 and c >= 4,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, b - 2, c - 3, 2)),
    _r("d2.b9", lambda a, b, c, d: a == 0 and d == 2 and b >= 9,
       lambda a, b, c, d: (0, 6, 0, 1), lambda a, b, c, d: (0, b - 6, c, 1)),
    # ---- twos and fives only ----
    _r("bd.d1m5", lambda a, b, c, d: a == 0 and c == 0 and d >= 6 and d % 5 == 1 and b >= 8,
       lambda a, b, c, d: (0, 4, 0, d - 3), lambda a, b, c, d: (0, b - 4, 0, 3)),
    _r("bd.d3m5.b8", lambda a, b, c, d: a == 0 and c == 0 and d >= 8 and d % 5 == 3 and b == 8,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, 4, 0, d - 4), True),
    _r("bd.d3m5.b9", lambda a, b, c, d: a == 0 and c == 0 and d >= 8 and d % 5 == 3 and b == 9,
       lambda a, b, c, d: (0, 4, 0, 3), lambda a, b, c, d: (0, 5, 0, d - 3)),
    _r("bd.d3m5.b10", lambda a, b, c, d: a == 0 and c == 0 and d >= 8 and d % 5 == 3 and b >= 10,
       lambda a, b, c, d: (0, 6, 0, d - 3), lambda a, b, c, d: (0, b - 6, 0, 3)),
    _r("bd.d4m5", lambda a, b, c, d: a == 0 and c == 0 and d >= 4 and d % 5 == 4 and b >= 10,
       lambda a, b, c, d: (0, 6, 0, d - 3), lambda a, b, c, d: (0, b - 6, 0, 3)),
    _r("bd.d0m5.b8", lambda a, b, c, d: a == 0 and c == 0 and d >= 5 and d % 5 == 0 and b == 8,
       lambda a, b, c, d: (0, 4, 0, 3), lambda a, b, c, d: (0, 4, 0, d - 3)),
    _r("bd.d0m5.b9", lambda a, b, c, d: a == 0 and c == 0 and d >= 5 and d % 5 == 0 and b == 9,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, 5, 0, d - 4)),
    _r("bd.d0m5.b10", lambda a, b, c, d: a == 0 and c == 0 and d >= 5 and d % 5 == 0 and b == 10,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, 6, 0, d - 4), True),
    _r("bd.d0m5.b11", lambda a, b, c, d: a == 0 and c == 0 and d >= 10 and d % 5 == 0 and b == 11,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, 7, 0, d - 4)),
    _r("bd.d0m5.b12", lambda a, b, c, d: a == 0 and c == 0 and d >= 5 and d % 5 == 0 and b >= 12,
       lambda a, b, c, d: (0, 8, 0, d - 3), lambda a, b, c, d: (0, b - 8, 0, 3)),
    _r("bd.d2m5", lambda a, b, c, d: a == 0 and c == 0 and d >= 7 and d % 5 == 2 and b >= 8,
       lambda a, b, c, d: (0, 4, 0, d - 3), lambda a, b, c, d: (0, b - 4, 0, 3)),
    # ---- single 2 ----
    _r("b1.d2m5.c8", lambda a, b, c, d: a == 0 and b == 1 and c == 8 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 1, 4, d - 4)),
    _r("b1.d2m5.c1m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 9 and c % 3 == 1
       and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 6, d - 5), lambda a, b, c, d: (0, 1, c - 6, 5)),
    _r("b1.d2m5.c02m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 9 and c % 3 != 1
       and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 6, d - 4), lambda a, b, c, d: (0, 1, c - 6, 4)),
    _r("b1.d4m5.c9", lambda a, b, c, d: a == 0 and b == 1 and c == 9 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 1, 5, d - 4)),
    _r("b1.d4m5.c10", lambda a, b, c, d: a == 0 and b == 1 and c >= 10 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (0, 1, c - 6, d - 2)),
    _r("b1.d1m5.c8", lambda a, b, c, d: a == 0 and b == 1 and c == 8 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 1, 4, d - 4)),
    _r("b1.d1m5.c0m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 9 and c % 3 == 0
       and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 6, d - 4), lambda a, b, c, d: (0, 1, c - 6, 4)),
    _r("b1.d1m5.c1m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 10 and c % 3 == 1
       and d >= 11 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (0, 1, c - 6, d - 2)),
    _r("b1.d1m5.c2m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 11 and c % 3 == 2
       and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 6, d - 4), lambda a, b, c, d: (0, 1, c - 6, 4)),
    _r("b1.d3m5.c8", lambda a, b, c, d: a == 0 and b == 1 and c == 8 and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 1, 4, d - 4)),
    _r("b1.d3m5.c0m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 9 and c % 3 == 0
       and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 6, d - 5), lambda a, b, c, d: (0, 1, c - 6, 5)),
    _r("b1.d3m5.c1m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 10 and c % 3 == 1
       and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 6, d - 5), lambda a, b, c, d: (0, 1, c - 6, 5)),
    _r("b1.d3m5.c2m3", lambda a, b, c, d: a == 0 and b == 1 and c >= 11 and c % 3 == 2
       and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 6, d - 6), lambda a, b, c, d: (0, 1, c - 6, 6)),
    _r("b1.d0m5.c89", lambda a, b, c, d: a == 0 and b == 1 and c in (8, 9)
       and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 1, c - 4, d - 4)),
    _r("b1.d0m5.c10", lambda a, b, c, d: a == 0 and b == 1 and c >= 10 and d >= 10 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 6, 3), lambda a, b, c, d: (0, 1, c - 6, d - 3)),
    # ---- double 2 ----
    _r("b2.d1m5.c7", lambda a, b, c, d: a == 0 and b == 2 and c == 7 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 2, 3, d - 4)),
    _r("b2.d1m5.c8", lambda a, b, c, d: a == 0 and b == 2 and c >= 8 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 6, d - 3), lambda a, b, c, d: (0, 2, c - 6, 3)),
    _r("b2.d0m5.c6", lambda a, b, c, d: a == 0 and b == 2 and c == 6 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 2, 2, d - 4)),
    _r("b2.d0m5.c7", lambda a, b, c, d: a == 0 and b == 2 and c == 7 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 2, 3, d - 4), True),
    _r("b2.d0m5.c8", lambda a, b, c, d: a == 0 and b == 2 and c >= 8 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 6, d - 3), lambda a, b, c, d: (0, 2, c - 6, 3)),
    _r("b2.d2m5.c8", lambda a, b, c, d: a == 0 and b == 2 and c >= 8 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (0, 2, c - 6, d - 2)),
    _r("b2.d4m5.c6", lambda a, b, c, d: a == 0 and b == 2 and c >= 6 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 2, c - 4, d - 4)),
    _r("b2.d3m5.c7", lambda a, b, c, d: a == 0 and b == 2 and c == 7 and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 2, 3, d - 4)),
    _r("b2.d3m5.c8", lambda a, b, c, d: a == 0 and b == 2 and c >= 8 and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 6, 3), lambda a, b, c, d: (0, 2, c - 6, d - 3)),
    # ---- triple 2 ----
    _r("b3.c5", lambda a, b, c, d: a == 0 and b == 3 and c == 5 and d >= 4 and d % 5 != 2,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 3, 1, d - 4)),
    _r("b3.c7d3", lambda a, b, c, d: a == 0 and b == 3 and c >= 7 and d == 3,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (0, 3, c - 6, 1)),
    _r("b3.c7d4", lambda a, b, c, d: a == 0 and b == 3 and c >= 7 and d == 4,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (0, 3, c - 6, 2)),
    _r("b3.c7d5", lambda a, b, c, d: a == 0 and b == 3 and c >= 7 and d == 5,
       lambda a, b, c, d: (0, 0, 6, 3), lambda a, b, c, d: (0, 3, c - 6, 2)),
    _r("b3.c6d6", lambda a, b, c, d: a == 0 and b == 3 and c >= 6 and d >= 6,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 3, c - 4, d - 4)),
    # ---- b >= 4, d = 3 mod 5 ----
    _r("d3m5.b4c6", lambda a, b, c, d: a == 0 and b == 4 and c == 6 and d % 5 == 3,
       lambda a, b, c, d: (0, 2, 3, 1), lambda a, b, c, d: (0, 2, 3, d - 1)),
    _r("d3m5.b4c7", lambda a, b, c, d: a == 0 and b == 4 and c >= 7 and d % 5 == 3,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 2, c - 3, d), True),
    _r("d3m5.b5c5", lambda a, b, c, d: a == 0 and b == 5 and c >= 5 and d % 5 == 3,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 3, c - 3, d)),
    _r("d3m5.b6c2", lambda a, b, c, d: a == 0 and b == 6 and c == 2 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (0, 2, 2, 0)),
    _r("d3m5.b6c3", lambda a, b, c, d: a == 0 and b == 6 and c >= 3 and d % 5 == 3,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 4, c - 3, d)),
    _r("d3m5.b7c18", lambda a, b, c, d: a == 0 and b == 7 and 1 <= c <= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (0, 3, c, 0)),
    _r("d3m5.b7c9", lambda a, b, c, d: a == 0 and b == 7 and c >= 9 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 6, d), lambda a, b, c, d: (0, 7, c - 6, 0)),
    _r("d3m5.b8c1", lambda a, b, c, d: a == 0 and b == 8 and c == 1 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (0, 4, 1, 0), True),
    _r("d3m5.b9c1", lambda a, b, c, d: a == 0 and b >= 9 and c == 1 and d % 5 == 3,
       lambda a, b, c, d: (0, 6, 0, d - 2), lambda a, b, c, d: (0, b - 6, 1, 2)),
    _r("d3m5.b8c2", lambda a, b, c, d: a == 0 and b == 8 and c == 2 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 1, 0), lambda a, b, c, d: (0, 4, 1, d)),
    _r("d3m5.b9c2", lambda a, b, c, d: a == 0 and b >= 9 and c == 2 and d % 5 == 3,
       lambda a, b, c, d: (0, 6, 1, d - 2), lambda a, b, c, d: (0, b - 6, 1, 2)),
    _r("d3m5.b8c3", lambda a, b, c, d: a == 0 and b >= 8 and c >= 3 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (0, b - 4, c, 0)),
    # ---- b >= 4, d = 2 mod 5, d >= 7 ----
    _r("d2m5.c1b8", lambda a, b, c, d: a == 0 and b >= 8 and c == 1 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, b - 4, 1, d - 4)),
    _r("d2m5.c2b7", lambda a, b, c, d: a == 0 and b >= 7 and c == 2 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, b - 4, 2, d - 4)),
    _r("d2m5.c3b6", lambda a, b, c, d: a == 0 and b == 6 and c == 3 and d % 5 == 2,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 4, 0, d)),
    _r("d2m5.c3b7", lambda a, b, c, d: a == 0 and b >= 7 and c == 3 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, b - 4, 3, d - 4)),
    _r("d2m5.c4b4", lambda a, b, c, d: a == 0 and b == 4 and c == 4 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 4, 0, d - 4), True),
    _r("d2m5.c4b5", lambda a, b, c, d: a == 0 and b >= 5 and c == 4 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, b - 2, 1, d)),
    _r("d2m5.c5", lambda a, b, c, d: a == 0 and b >= 4 and c >= 5 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, b, c - 4, d - 4)),
    # ---- b >= 4, d = 1 mod 5, d >= 6 ----
    _r("d1m5.b4c4", lambda a, b, c, d: a == 0 and b == 4 and c >= 4 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 4, c - 4, d - 4)),
    _r("d1m5.b5c4", lambda a, b, c, d: a == 0 and b == 5 and c >= 4 and d % 5 == 1,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 3, c - 3, d)),
    _r("d1m5.b6c3", lambda a, b, c, d: a == 0 and b == 6 and c >= 3 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 4, 1, 0), lambda a, b, c, d: (0, 2, c - 1, d)),
    _r("d1m5.b7", lambda a, b, c, d: a == 0 and b >= 7 and c >= 1 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 4, 0, d - 2), lambda a, b, c, d: (0, b - 4, c, 2)),
    # ---- b >= 4, d = 0 mod 5, d >= 5 ----
    _r("d0m5.b4c5", lambda a, b, c, d: a == 0 and b == 4 and c >= 5 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 2, c - 3, d)),
    _r("d0m5.b5c4", lambda a, b, c, d: a == 0 and b == 5 and c >= 4 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 3, c - 3, d)),
    _r("d0m5.b6c2", lambda a, b, c, d: a == 0 and b == 6 and c == 2 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 4, 0, d - 1), lambda a, b, c, d: (0, 2, 2, 1)),
    _r("d0m5.b6c3", lambda a, b, c, d: a == 0 and b == 6 and c == 3 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 4, 1, d), lambda a, b, c, d: (0, 2, 2, 0)),
    _r("d0m5.b6c4", lambda a, b, c, d: a == 0 and b == 6 and c >= 4 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 2, 3, 0), lambda a, b, c, d: (0, 4, c - 3, d)),
    _r("d0m5.b7", lambda a, b, c, d: a == 0 and b >= 7 and c >= 1 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 4, 0, d - 2), lambda a, b, c, d: (0, b - 4, c, 2)),
    # ---- b >= 4, d = 4 mod 5 ----
    _r("d4m5.b4c4", lambda a, b, c, d: a == 0 and b == 4 and c == 4 and d % 5 == 4,
       lambda a, b, c, d: (0, 2, 2, 3), lambda a, b, c, d: (0, 2, 2, d - 3)),
    _r("d4m5.b4c5d4", lambda a, b, c, d: a == 0 and b == 4 and c >= 5 and d == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 4, c - 4, 0)),
    _r("d4m5.b4c5d9", lambda a, b, c, d: a == 0 and b == 4 and c >= 5 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (0, 4, c - 4, d - 4)),
    _r("d4m5.c1b7", lambda a, b, c, d: a == 0 and 7 <= b <= 10 and c == 1 and d % 5 == 4,
       lambda a, b, c, d: (0, 4, 0, d - 1), lambda a, b, c, d: (0, b - 4, 1, 1)),
    _r("d4m5.c1b11", lambda a, b, c, d: a == 0 and b >= 11 and c == 1 and d % 5 == 4,
       lambda a, b, c, d: (0, 8, 0, d - 2), lambda a, b, c, d: (0, b - 8, 1, 2)),
    _r("d4m5.b5c3", lambda a, b, c, d: a == 0 and b == 5 and c >= 3 and d % 5 == 4,
       lambda a, b, c, d: (0, 2, 2, 3), lambda a, b, c, d: (0, 3, c - 2, d - 3)),
    _r("d4m5.b6c23", lambda a, b, c, d: a == 0 and b == 6 and c in (2, 3) and d == 4,
       lambda a, b, c, d: (0, 4, 0, 4), lambda a, b, c, d: (0, 2, c, 0)),
    _r("d4m5.b6c4d4", lambda a, b, c, d: a == 0 and b == 6 and c >= 4 and d == 4,
       lambda a, b, c, d: (0, 2, 3, 1), lambda a, b, c, d: (0, 4, c - 3, 3)),
    _r("d4m5.b6c2d9", lambda a, b, c, d: a == 0 and b == 6 and c >= 2 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 4, 0, 3), lambda a, b, c, d: (0, 2, c, d - 3)),
    _r("d4m5.b7c2", lambda a, b, c, d: a == 0 and b >= 7 and c >= 2 and d % 5 == 4,
       lambda a, b, c, d: (0, 4, 0, d - 1), lambda a, b, c, d: (0, b - 4, c, 1)),
    # ---- one 1, no 2s ----
    _r("a1b0.d1m5.c8", lambda a, b, c, d: a == 1 and b == 0 and c == 8 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 0, 4, d - 4), True),
    _r("a1b0.d1m5.c9", lambda a, b, c, d: a == 1 and b == 0 and c >= 9 and d >= 6 and d % 5 == 1,
       lambda a, b, c, d: (0, 0, 6, d - 4), lambda a, b, c, d: (1, 0, c - 6, 4)),
    _r("a1b0.d2m5.c8", lambda a, b, c, d: a == 1 and b == 0 and c == 8 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 0, 4, d - 4)),
    _r("a1b0.d2m5.c9", lambda a, b, c, d: a == 1 and b == 0 and c >= 9 and d >= 7 and d % 5 == 2,
       lambda a, b, c, d: (0, 0, 6, d - 4), lambda a, b, c, d: (1, 0, c - 6, 4)),
    _r("a1b0.d0m5.c8", lambda a, b, c, d: a == 1 and b == 0 and c == 8 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 0, 4, d - 4)),
    _r("a1b0.d0m5.c9", lambda a, b, c, d: a == 1 and b == 0 and c >= 9 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 0, 6, d - 3), lambda a, b, c, d: (1, 0, c - 6, 3)),
    _r("a1b0.d4m5.c8", lambda a, b, c, d: a == 1 and b == 0 and c >= 8 and d >= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 0, c - 4, d - 4)),
    _r("a1b0.d3m5.c7", lambda a, b, c, d: a == 1 and b == 0 and c >= 7 and d >= 8 and d % 5 == 3,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 0, c - 4, d - 4)),
    # ---- one 1, one 2 ----
    _r("a1b1.d2.c0m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 6 and c % 3 == 0 and d == 2,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (1, 1, c - 6, 0)),
    _r("a1b1.d2.c1m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 7 and c % 3 == 1 and d == 2,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (1, 1, c - 6, 0)),
    _r("a1b1.d3.c0m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 6 and c % 3 == 0 and d == 3,
       lambda a, b, c, d: (0, 0, 6, 3), lambda a, b, c, d: (1, 1, c - 6, 0)),
    _r("a1b1.d3.c1m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 7 and c % 3 == 1 and d == 3,
       lambda a, b, c, d: (0, 0, 6, 3), lambda a, b, c, d: (1, 1, c - 6, 0)),
    _r("a1b1.d4.c1m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 4 and c % 3 == 1 and d == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 1, c - 4, 0)),
    _r("a1b1.d4.c2m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 5 and c % 3 == 2 and d == 4,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 1, c - 4, 0)),
    _r("a1b1.d4.c0m3", lambda a, b, c, d: a == 1 and b == 1 and c >= 9 and c % 3 == 0 and d == 4,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (1, 1, c - 6, 2)),
    _r("a1b1.d5", lambda a, b, c, d: a == 1 and b == 1 and c >= 6 and d == 5,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 1, c - 4, 1)),
    _r("a1b1.d6", lambda a, b, c, d: a == 1 and b == 1 and c >= 6 and d == 6,
       lambda a, b, c, d: (0, 0, 4, 4), lambda a, b, c, d: (1, 1, c - 4, 2)),
    # ---- one 1, no 3s ----
    _r("a1c0.d2", lambda a, b, c, d: a == 1 and c == 0 and b >= 9 and d == 2,
       lambda a, b, c, d: (0, 6, 0, 1), lambda a, b, c, d: (1, b - 6, 0, 1)),
    _r("a1c0.d3m5", lambda a, b, c, d: a == 1 and c == 0 and 4 <= b <= 6 and d % 5 == 3,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (1, b - 4, 0, 0)),
    _r("a1c0.d4m5", lambda a, b, c, d: a == 1 and c == 0 and 4 <= b <= 9 and d % 5 == 4,
       lambda a, b, c, d: (0, 4, 0, d), lambda a, b, c, d: (1, b - 4, 0, 0)),
    _r("a1c0.d0m5", lambda a, b, c, d: a == 1 and c == 0 and b == 7 and d >= 5 and d % 5 == 0,
       lambda a, b, c, d: (0, 4, 0, d - 1), lambda a, b, c, d: (1, 3, 0, 1)),
    # ---- one 1, single 3 and 5, many 2s ----
    _r("a1.b8c1d1", lambda a, b, c, d: a == 1 and b >= 8 and c == 1 and d == 1,
       lambda a, b, c, d: (0, 4, 1, 0), lambda a, b, c, d: (1, b - 4, 0, 1)),
    # ---- two 1s ----
    _r("a2b0.d2", lambda a, b, c, d: a == 2 and b == 0 and c >= 6 and d == 2,
       lambda a, b, c, d: (0, 0, 6, 2), lambda a, b, c, d: (2, 0, c - 6, 0)),
)
