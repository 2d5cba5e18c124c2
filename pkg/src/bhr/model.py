"""Edge-length multisets and Hamiltonian-path realizations on K_v.

The complete graph K_v has vertex set {0, ..., v-1}.  An edge [x, y] has
cyclic length min(|x-y|, v-|x-y|).  A list of v-1 lengths is realized by a
Hamiltonian path either linearly (absolute differences) or cyclically
(cyclic lengths).  All stored paths are normalized to start at vertex 0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InvalidEdgeError, OrderMismatchError, ParseError

__all__ = [
    "EdgeLengthList",
    "PathRealization",
    "ValidationReport",
    "edge_length",
    "linear_lengths",
    "cyclic_lengths",
    "is_perfect",
    "validate",
]


def edge_length(x: int, y: int, v: int) -> int:
    """Length min(|x-y|, v-|x-y|) of the edge [x, y] of K_v."""
    if v < 2:
        raise InvalidEdgeError(f"no edges exist on {v} vertex(es)")
    if not (0 <= x < v and 0 <= y < v):
        raise InvalidEdgeError(f"vertex pair ({x}, {y}) out of range for order {v}")
    if x == y:
        raise InvalidEdgeError(f"loop edge at vertex {x}")
    d = abs(x - y)
    return min(d, v - d)


@dataclass(frozen=True, slots=True)
class EdgeLengthList:
    """Multiset of positive edge lengths, stored as sorted (length, mult) pairs.

    The derived order is v = 1 + sum of multiplicities, i.e. the list is
    read as the length multiset of a Hamiltonian path on v vertices.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 0
        for length, mult in self.pairs:
            if length <= prev:
                raise ValueError("lengths must be strictly increasing and >= 1")
            if mult < 1:
                raise ValueError(f"multiplicity of length {length} must be >= 1")
            prev = length

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "EdgeLengthList":
        return cls(tuple(sorted((int(l), int(m)) for l, m in counts.items() if m)))

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "EdgeLengthList":
        return cls.from_counts(Counter(lengths))

    @classmethod
    def from_exponents(cls, a: int, b: int, c: int, d: int) -> "EdgeLengthList":
        """List {1^a, 2^b, 3^c, 5^d} (zero exponents omitted)."""
        return cls.from_counts({1: a, 2: b, 3: c, 5: d})

    @classmethod
    def parse(cls, text: str) -> "EdgeLengthList":
        """Parse ``1,3^3,5^6`` syntax; ``^1`` may be omitted, repeats are summed."""
        counts: Counter[int] = Counter()
        stripped = text.replace(" ", "").replace("\t", "")
        if stripped in ("", "-"):
            return cls(())
        for pos, term in enumerate(stripped.split(",")):
            if not term:
                raise ParseError(f"empty term at position {pos} in list {text!r}")
            base, sep, exp = term.partition("^")
            try:
                length = int(base)
                mult = int(exp) if sep else 1
            except ValueError:
                raise ParseError(f"bad term {term!r} at position {pos}") from None
            if length < 1 or mult < 1:
                raise ParseError(f"bad term {term!r} at position {pos}")
            counts[length] += mult
        return cls.from_counts(counts)

    @property
    def order(self) -> int:
        """Order v of the complete graph: 1 + number of elements."""
        return 1 + len(self)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.pairs)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def cyclic_admissible(self) -> bool:
        """True when every length is at most floor(v/2)."""
        return not self.pairs or self.pairs[-1][0] <= self.order // 2

    def multiplicity(self, length: int) -> int:
        for l, m in self.pairs:
            if l == length:
                return m
        return 0

    def abcd(self) -> tuple[int, int, int, int]:
        """Exponents (a, b, c, d) of {1^a, 2^b, 3^c, 5^d}; support must allow it."""
        if any(l not in (1, 2, 3, 5) for l in self.support):
            raise ValueError(f"support {self.support} not within {{1, 2, 3, 5}}")
        return (self.multiplicity(1), self.multiplicity(2),
                self.multiplicity(3), self.multiplicity(5))

    def elements(self) -> Iterator[int]:
        for length, mult in self.pairs:
            for _ in range(mult):
                yield length

    def __len__(self) -> int:
        return sum(m for _, m in self.pairs)

    def __add__(self, other: "EdgeLengthList") -> "EdgeLengthList":
        """Multiset sum (multiplicities add)."""
        merged = Counter(dict(self.pairs))
        merged.update(dict(other.pairs))
        return EdgeLengthList.from_counts(merged)

    def format(self) -> str:
        if not self.pairs:
            return "-"
        return ",".join(f"{l}^{m}" if m > 1 else f"{l}" for l, m in self.pairs)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True, slots=True)
class PathRealization:
    """Hamiltonian path of K_v as a vertex sequence starting at 0."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        v = len(self.vertices)
        if v == 0:
            raise ValueError("empty vertex sequence (order 0 is rejected)")
        if self.vertices[0] != 0:
            raise ValueError(f"paths are normalized to start at 0, got {self.vertices[0]}")
        if set(self.vertices) != set(range(v)):
            raise ValueError(f"vertices are not a permutation of 0..{v - 1}")

    @classmethod
    def parse(cls, text: str) -> "PathRealization":
        """Parse ``[0,3,8,2]`` syntax."""
        stripped = text.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise ParseError(f"path must be bracketed: {text!r}")
        body = stripped[1:-1].replace(" ", "")
        if not body:
            raise ParseError("empty path (order 0 is rejected)")
        try:
            seq = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise ParseError(f"non-integer vertex in {text!r}") from None
        try:
            return cls(seq)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    def format(self) -> str:
        return "[" + ",".join(str(x) for x in self.vertices) + "]"

    def __str__(self) -> str:
        return self.format()


def linear_lengths(p: PathRealization) -> EdgeLengthList:
    """Multiset of absolute consecutive differences (entries may reach v-1)."""
    seq = p.vertices
    return EdgeLengthList.from_lengths(abs(seq[i] - seq[i + 1]) for i in range(len(seq) - 1))


def cyclic_lengths(p: PathRealization) -> EdgeLengthList:
    """Multiset of cyclic edge lengths of the v-1 consecutive pairs."""
    seq = p.vertices
    v = len(seq)
    return EdgeLengthList.from_lengths(
        edge_length(seq[i], seq[i + 1], v) for i in range(v - 1)
    )


def is_perfect(p: PathRealization) -> bool:
    """True when the terminal vertex is the largest label v-1."""
    return p.terminal == p.order - 1


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Outcome of checking a path against a target list in a given mode."""

    mode: str
    passed: bool
    normalized: bool
    perfect: bool | None
    # first differing length on a mismatch: (length, expected mult, actual mult)
    mismatch: tuple[int, int, int] | None

    def __str__(self) -> str:
        if self.passed:
            tail = ", perfect" if self.perfect else ""
            return f"pass ({self.mode}{tail})"
        l, want, got = self.mismatch  # type: ignore[misc]
        return f"fail ({self.mode}): length {l} expected x{want}, got x{got}"


def validate(p: PathRealization, target: EdgeLengthList, mode: str) -> ValidationReport:
    """Check that the mode's length multiset of ``p`` equals ``target`` exactly.

    Raises OrderMismatchError when the path and list orders differ; multiset
    mismatches are reported, naming the smallest differing length.
    """
    if mode not in ("linear", "cyclic"):
        raise ValueError(f"mode must be 'linear' or 'cyclic', got {mode!r}")
    if p.order != target.order:
        raise OrderMismatchError(
            f"path order {p.order} != list order {target.order}"
        )
    actual = linear_lengths(p) if mode == "linear" else cyclic_lengths(p)
    mismatch = None
    want = target.counts
    got = actual.counts
    for length in sorted(set(want) | set(got)):
        if want.get(length, 0) != got.get(length, 0):
            mismatch = (length, want.get(length, 0), got.get(length, 0))
            break
    perfect = is_perfect(p) if mode == "linear" else None
    return ValidationReport(
        mode=mode,
        passed=mismatch is None,
        normalized=True,
        perfect=perfect,
        mismatch=mismatch,
    )
