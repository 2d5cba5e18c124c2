"""The two equivalent solvability conditions and the residue-class diagnostic.

Condition (divisor form): for every divisor d of v, the list contains at
most v - d multiples of d.  Condition (sublist form): every sublist J that
shares no value with its complement satisfies |J| >= gcd(v, complement) - 1.
Both are necessary for cyclic realizability; their equivalence and the
necessity are exercised as test properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidDivisorError
from .model import EdgeLengthList, PathRealization

__all__ = [
    "ConditionReport",
    "condition_two",
    "condition_one",
    "divisors",
    "residue_components",
]


@dataclass(frozen=True, slots=True)
class ConditionReport:
    """Result of a condition check; a failing check carries a witness."""

    holds: bool
    # divisor-form witness
    divisor: int | None = None
    multiple_count: int | None = None
    # sublist-form witness
    sublist: EdgeLengthList | None = None
    gcd_value: int | None = None

    def witness_text(self) -> str:
        if self.holds:
            return "holds"
        if self.divisor is not None:
            return f"divisor {self.divisor}: {self.multiple_count} multiples present"
        return f"sublist {self.sublist} too small for gcd {self.gcd_value}"


def divisors(v: int) -> list[int]:
    """Positive divisors of v in ascending order."""
    small = [d for d in range(1, int(v**0.5) + 1) if v % d == 0]
    large = [v // d for d in reversed(small) if v // d not in small]
    return small + large


def condition_two(lst: EdgeLengthList) -> ConditionReport:
    """Divisor form: every divisor d of v bounds the multiples of d by v - d.

    Divisors are scanned in ascending order and the first failure wins.
    """
    v = lst.order
    for d in divisors(v):
        count = sum(m for l, m in lst.pairs if l % d == 0)
        if count > v - d:
            return ConditionReport(holds=False, divisor=d, multiple_count=count)
    return ConditionReport(holds=True)


def condition_one(lst: EdgeLengthList) -> ConditionReport:
    """Sublist form: |J| >= gcd(v, lengths outside J) - 1 for every valid J.

    A sublist J with J disjoint from its complement must consist of whole
    multiplicity blocks, so only the 2^|support| block unions are candidates.
    The gcd over an empty complement (J = L) is defined as v, which makes
    that case hold by |L| = v - 1.  Subsets are scanned by ascending bitmask
    over the sorted support and the first failure wins; gcds and sizes are
    extended one bit at a time so the scan stays linear per subset.
    """
    v = lst.order
    support = lst.support
    n = len(support)
    mults = [lst.multiplicity(l) for l in support]
    total = sum(mults)
    # per-mask gcd of v with the kept lengths, and kept multiplicity
    gcds = [v] * (1 << n)
    kept = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        gcds[mask] = gcd(gcds[rest], support[i])
        kept[mask] = kept[rest] + mults[i]
    for mask in range(1 << n):
        j_size = total - kept[mask]
        g = gcds[mask]
        if j_size < g - 1:
            j_counts = {
                support[i]: mults[i] for i in range(n) if not mask >> i & 1
            }
            return ConditionReport(
                holds=False,
                sublist=EdgeLengthList.from_counts(j_counts),
                gcd_value=g,
            )
    return ConditionReport(holds=True)


def residue_components(p: PathRealization, d: int) -> int:
    """Components left after deleting path edges whose cyclic length d doesn't divide.

    Also asserts the two structural facts used by the necessity argument:
    every surviving component lies inside a single residue class mod d and
    has at most v/d vertices.
    """
    v = p.order
    if d < 1 or v % d != 0:
        raise InvalidDivisorError(f"{d} does not divide order {v}")
    # d divides v, so d divides the cyclic length iff it divides |x - y|
    parent = list(range(v))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seq = p.vertices
    for i in range(v - 1):
        x, y = seq[i], seq[i + 1]
        if abs(x - y) % d == 0:
            parent[find(x)] = find(y)

    groups: dict[int, list[int]] = {}
    for x in range(v):
        groups.setdefault(find(x), []).append(x)
    for members in groups.values():
        residues = {x % d for x in members}
        if len(residues) != 1:
            raise AssertionError(f"component {members} spans residues {residues}")
        if len(members) > v // d:
            raise AssertionError(f"component {members} exceeds v/d = {v // d}")
    return len(groups)
