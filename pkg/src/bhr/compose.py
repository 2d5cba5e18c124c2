"""Realization algebra: perfect concatenation, ones-prefix extension, translation.

A perfect realization ends at its largest vertex s, so a second realization
can be appended after shifting it by s; the combined path realizes the
multiset sum of the two lists.  No cyclic analogue exists: concatenation
generally changes the cyclic length multiset.
"""

from __future__ import annotations

from .errors import CompositionError, InvalidTargetError
from .model import (
    EdgeLengthList,
    PathRealization,
    is_perfect,
    linear_lengths,
    validate,
)

__all__ = ["compose", "extend_with_ones", "ones_path", "translate"]


def ones_path(count: int) -> PathRealization:
    """The trivial perfect realization [0, 1, ..., count] of {1^count}."""
    if count < 0:
        raise ValueError("count must be >= 0")
    return PathRealization(tuple(range(count + 1)))


def compose(r1: PathRealization, r2: PathRealization) -> PathRealization:
    """Concatenate a perfect realization with another, shifting the second.

    The result realizes the multiset sum of the two linear length lists and
    is perfect exactly when ``r2`` is.  The output is re-validated against
    that sum unconditionally.
    """
    if not is_perfect(r1):
        raise CompositionError(
            f"left operand must be perfect (ends at {r1.terminal}, order {r1.order})"
        )
    s = r1.order - 1
    combined = PathRealization(r1.vertices + tuple(y + s for y in r2.vertices[1:]))
    expected = linear_lengths(r1) + linear_lengths(r2)
    report = validate(combined, expected, "linear")
    if not report.passed:
        raise CompositionError(f"composition self-check failed: {report}")
    return combined


def extend_with_ones(r: PathRealization, target_ones: int) -> PathRealization:
    """Raise the multiplicity of length 1 to ``target_ones`` via a ones prefix."""
    current = linear_lengths(r).multiplicity(1)
    if target_ones < current:
        raise InvalidTargetError(
            f"target ones-count {target_ones} below current {current}"
        )
    if target_ones == current:
        return r
    return compose(ones_path(target_ones - current), r)


def translate(p: PathRealization, g: int, v: int | None = None) -> tuple[int, ...]:
    """Vertex sequence of p with every vertex shifted by g modulo v.

    Returns a raw sequence: translation generally breaks the start-at-0
    normalization.  Cyclic lengths are invariant under translation.
    """
    if v is None:
        v = p.order
    if v != p.order:
        raise ValueError(f"order {v} does not match path order {p.order}")
    if not 0 <= g < v:
        raise ValueError(f"shift {g} out of range for order {v}")
    return tuple((x + g) % v for x in p.vertices)
