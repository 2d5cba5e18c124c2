"""Difference lists, Cayley multigraphs on Z_v, and translate decompositions.

A Hamiltonian path H on Z_v, shifted by every group element, decomposes the
Cayley multigraph whose connection multiset is the difference list of H.
The edge multiplicity of an undirected pair [x, y] is the stored
multiplicity of (x - y) mod v; for the self-paired element v/2 both
directed differences coincide, so building from a length list contributes
2 per occurrence there.  That convention is exactly the one that makes the
translate-orbit identity hold, and the tests pin it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .compose import translate
from .errors import InvalidLengthError
from .model import EdgeLengthList, PathRealization

__all__ = [
    "CayleyMultigraph",
    "difference_list",
    "build_from_list",
    "verify_decomposition",
    "translate_orbit",
]


def difference_list(seq: tuple[int, ...] | PathRealization, v: int) -> Counter[int]:
    """Symmetric multiset of both directed differences along a path."""
    if isinstance(seq, PathRealization):
        seq = seq.vertices
    out: Counter[int] = Counter()
    for x, y in zip(seq, seq[1:]):
        if (x - y) % v == 0:
            raise InvalidLengthError(f"consecutive vertices {x}, {y} coincide mod {v}")
        out[(x - y) % v] += 1
        out[(y - x) % v] += 1
    return out


@dataclass(frozen=True, slots=True)
class CayleyMultigraph:
    """Order v and a symmetric connection multiset over Z_v minus 0."""

    v: int
    connection: tuple[tuple[int, int], ...]  # sorted (element, multiplicity)

    def __post_init__(self) -> None:
        counts = dict(self.connection)
        for g, m in counts.items():
            if not 1 <= g < self.v:
                raise ValueError(f"connection element {g} outside 1..{self.v - 1}")
            if m < 1:
                raise ValueError(f"multiplicity of {g} must be >= 1")
            if counts.get((-g) % self.v, 0) != m:
                raise ValueError(
                    f"connection not symmetric: {g} has {m}, "
                    f"{(-g) % self.v} has {counts.get((-g) % self.v, 0)}"
                )

    @classmethod
    def from_counts(cls, v: int, counts: Counter[int] | dict[int, int]) -> "CayleyMultigraph":
        return cls(v, tuple(sorted((g, m) for g, m in counts.items() if m)))

    @property
    def size(self) -> int:
        """Total connection multiset size (= regular degree)."""
        return sum(m for _, m in self.connection)

    def edge_multiplicity(self, x: int, y: int) -> int:
        """Multiplicity of the undirected edge [x, y]."""
        return dict(self.connection).get((x - y) % self.v, 0)

    def edge_multiset(self) -> Counter[tuple[int, int]]:
        """All undirected edges with multiplicity."""
        out: Counter[tuple[int, int]] = Counter()
        counts = dict(self.connection)
        for x in range(self.v):
            for y in range(x + 1, self.v):
                m = counts.get((x - y) % self.v, 0)
                if m:
                    out[(x, y)] = m
        return out


def build_from_list(lst: EdgeLengthList, v: int | None = None) -> CayleyMultigraph:
    """Cayley multigraph with connection L union -L.

    The order defaults to the list's derived order but can be given
    explicitly (e.g. a single self-paired length on four vertices).
    Each occurrence of a length l contributes l and v - l; for l = v/2 the
    two representatives coincide, contributing multiplicity 2.
    """
    if v is None:
        v = lst.order
    counts: Counter[int] = Counter()
    for l, m in lst.pairs:
        if l > v // 2:
            raise InvalidLengthError(f"length {l} exceeds floor({v}/2)")
        counts[l] += m
        counts[(v - l) % v] += m
    return CayleyMultigraph.from_counts(v, counts)


def translate_orbit(h: PathRealization) -> list[tuple[int, ...]]:
    """The v translates h + g for g in Z_v."""
    return [translate(h, g) for g in range(h.order)]


def verify_decomposition(h: PathRealization) -> bool:
    """Check {h + g} decomposes the Cayley multigraph built from its differences.

    Both sides are compared as undirected edge multisets, so the check is
    insensitive to the enumeration order of the translates.
    """
    v = h.order
    if v == 1:
        return True
    cayley = CayleyMultigraph.from_counts(v, difference_list(h, v))
    orbit_edges: Counter[tuple[int, int]] = Counter()
    for shifted in translate_orbit(h):
        for x, y in zip(shifted, shifted[1:]):
            orbit_edges[(min(x, y), max(x, y))] += 1
    return orbit_edges == cayley.edge_multiset()
