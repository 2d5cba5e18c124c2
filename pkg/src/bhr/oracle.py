"""Exhaustive backtracking over Hamiltonian paths with prescribed lengths.

This is the independent ground truth for every decision table, nonexistence
claim, and frozen catalog entry.  The search is a plain depth-first
extension of partial paths from vertex 0: at each step it branches only to
unvisited vertices whose edge length (linear or cyclic) still has remaining
multiplicity.  No theorem-derived pruning is applied, so an exhausted run
is a proof by enumeration.

Branch order is ascending candidate vertex by default; the alternative
orders reorder candidates by remaining length multiplicity and are intended
for witness hunting, not ground-truth exhaustion (they explore the same
tree, deterministically, in a different order).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import CapExceededError
from .model import EdgeLengthList, PathRealization

__all__ = [
    "SearchOutcome",
    "SweepReport",
    "search",
    "search_unnormalized",
    "count_realizations",
    "sweep_conjecture",
    "compositions",
    "certificates",
    "DEFAULT_BUDGET",
    "DEFAULT_COUNT_CAP",
    "DEFAULT_SWEEP_CAP",
]

DEFAULT_BUDGET = 10**7
DEFAULT_COUNT_CAP = 13
DEFAULT_SWEEP_CAP = 13

ORDERS = ("ascending", "scarce", "abundant")

# exhausted, witness-free searches leave a re-runnable record here
_CERTIFICATES: dict[str, dict] = {}

# (pairs, mode, perfect, order) -> (found vertices | None, exhausted, nodes, budget used)
_MEMO: dict[tuple, tuple] = {}


def certificates() -> dict[str, dict]:
    """Registry of nonexistence certificates collected in this process."""
    return dict(_CERTIFICATES)


@dataclass(frozen=True, slots=True)
class SearchOutcome:
    found: PathRealization | None
    exhausted: bool
    nodes: int
    certificate: str | None = None

    @property
    def decided(self) -> bool:
        return self.found is not None or self.exhausted


def _candidate_builder(
    v: int, mode: str, lengths: tuple[int, ...], remaining: list[int],
    visited: bytearray, order: str,
) -> Callable[[int], list[tuple[int, int]]]:
    cyclic = mode == "cyclic"

    def cands(x: int) -> list[tuple[int, int]]:
        out = []
        for l in lengths:
            if not remaining[l]:
                continue
            if cyclic:
                y1 = x - l if x >= l else x - l + v
                y2 = x + l if x + l < v else x + l - v
                if not visited[y1]:
                    out.append((y1, l))
                if y2 != y1 and not visited[y2]:
                    out.append((y2, l))
            else:
                y1 = x - l
                y2 = x + l
                if y1 >= 0 and not visited[y1]:
                    out.append((y1, l))
                if y2 < v and not visited[y2]:
                    out.append((y2, l))
        if order == "ascending":
            out.sort()
        elif order == "scarce":
            out.sort(key=lambda yl: (remaining[yl[1]], yl[0]))
        else:  # abundant
            out.sort(key=lambda yl: (-remaining[yl[1]], yl[0]))
        return out

    return cands


def _register_certificate(
    lst: EdgeLengthList, mode: str, perfect: bool, order: str, nodes: int
) -> str:
    cert_id = f"{mode}:{'perfect:' if perfect else ''}{lst.format()}"
    _CERTIFICATES[cert_id] = {
        "list": lst.format(),
        "order": lst.order,
        "mode": mode,
        "perfect": perfect,
        "branch_order": order,
        "nodes": nodes,
        "start_vertex": 0,
    }
    return cert_id


def search(
    lst: EdgeLengthList,
    mode: str = "cyclic",
    budget: int = DEFAULT_BUDGET,
    order: str = "ascending",
    perfect: bool = False,
    use_memo: bool = True,
) -> SearchOutcome:
    """Search for a realization of ``lst`` starting at vertex 0.

    ``exhausted`` is True exactly when the full tree fit inside the node
    budget; in that case a missing witness is a nonexistence proof and a
    certificate is registered.  ``perfect`` (linear only) restricts to
    paths terminating at v-1.  Lists containing a length no edge of K_v can
    carry (above v-1 linearly, above floor(v/2) cyclically) are unrealizable
    by definition and exhaust with zero nodes.
    """
    if mode not in ("linear", "cyclic"):
        raise ValueError(f"mode must be 'linear' or 'cyclic', got {mode!r}")
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    if perfect and mode == "cyclic":
        raise ValueError("perfect applies to linear mode only")

    key = (lst.pairs, mode, perfect, order)
    if use_memo and key in _MEMO:
        vertices, exhausted, nodes, used = _MEMO[key]
        if vertices is not None or exhausted or used >= budget:
            found = PathRealization(vertices) if vertices is not None else None
            cert = None
            if exhausted and found is None:
                cert = _register_certificate(lst, mode, perfect, order, nodes)
            return SearchOutcome(found, exhausted, nodes, cert)

    v = lst.order
    max_len = (v - 1) if mode == "linear" else v // 2
    if lst.pairs and lst.pairs[-1][0] > max_len:
        outcome = SearchOutcome(
            None, True, 0, _register_certificate(lst, mode, perfect, order, 0)
        )
        if use_memo:
            _MEMO[key] = (None, True, 0, budget)
        return outcome
    if v == 1:
        found = PathRealization((0,))
        if use_memo:
            _MEMO[key] = ((0,), True, 0, budget)
        return SearchOutcome(found, True, 0, None)

    lengths = lst.support
    remaining = [0] * (max_len + 1)
    for l, m in lst.pairs:
        remaining[l] = m
    visited = bytearray(v)
    visited[0] = 1
    path = [0]
    cands = _candidate_builder(v, mode, lengths, remaining, visited, order)

    nodes = 0
    found_vertices: tuple[int, ...] | None = None
    over_budget = False
    cand_lists: list[list[tuple[int, int]]] = [cands(0)]
    cand_pos = [0]
    cyclic = mode == "cyclic"

    while cand_lists:
        clist = cand_lists[-1]
        pos = cand_pos[-1]
        if pos < len(clist):
            cand_pos[-1] = pos + 1
            y, l = clist[pos]
            if perfect and y == v - 1 and len(path) + 1 < v:
                continue
            nodes += 1
            if nodes > budget:
                nodes -= 1
                over_budget = True
                break
            visited[y] = 1
            remaining[l] -= 1
            path.append(y)
            if len(path) == v:
                found_vertices = tuple(path)
                break
            cand_lists.append(cands(y))
            cand_pos.append(0)
        else:
            cand_lists.pop()
            cand_pos.pop()
            if len(path) > 1:
                y = path.pop()
                x = path[-1]
                dxy = abs(x - y)
                l = min(dxy, v - dxy) if cyclic else dxy
                visited[y] = 0
                remaining[l] += 1

    # a witness stops the run early, so exhausted means: no witness, no abort
    exhausted = not over_budget and found_vertices is None
    found = PathRealization(found_vertices) if found_vertices is not None else None
    cert = None
    if exhausted and found is None:
        cert = _register_certificate(lst, mode, perfect, order, nodes)
    if use_memo:
        _MEMO[key] = (found_vertices, exhausted, nodes, budget)
    return SearchOutcome(found, exhausted, nodes, cert)


def search_unnormalized(
    lst: EdgeLengthList, mode: str, budget: int = DEFAULT_BUDGET
) -> tuple[tuple[int, ...] | None, bool, int]:
    """Reference search with the first-vertex-0 normalization dropped.

    Tries every start vertex and returns (raw witness or None, exhausted,
    nodes).  Audit helper for small orders; the raw witness need not start
    at 0, so it is not wrapped in PathRealization.
    """
    v = lst.order
    if v == 1:
        return (0,), True, 0
    total_nodes = 0
    for start in range(v):
        witness, nodes, exhausted = _search_from(lst, mode, start, budget - total_nodes)
        total_nodes += nodes
        if witness is not None:
            return witness, False, total_nodes
        if not exhausted:
            return None, False, total_nodes
    return None, True, total_nodes


def _search_from(
    lst: EdgeLengthList, mode: str, start: int, budget: int
) -> tuple[tuple[int, ...] | None, int, bool]:
    """DFS from an arbitrary start vertex; returns (witness, nodes, exhausted)."""
    v = lst.order
    max_len = (v - 1) if mode == "linear" else v // 2
    if lst.pairs and lst.pairs[-1][0] > max_len:
        return None, 0, True
    remaining = [0] * (max_len + 1)
    for l, m in lst.pairs:
        remaining[l] = m
    visited = bytearray(v)
    visited[start] = 1
    path = [start]
    cands = _candidate_builder(v, mode, lst.support, remaining, visited, "ascending")
    nodes = 0
    cand_lists = [cands(start)]
    cand_pos = [0]
    cyclic = mode == "cyclic"
    while cand_lists:
        clist = cand_lists[-1]
        pos = cand_pos[-1]
        if pos < len(clist):
            cand_pos[-1] = pos + 1
            y, l = clist[pos]
            nodes += 1
            if nodes > budget:
                return None, nodes - 1, False
            visited[y] = 1
            remaining[l] -= 1
            path.append(y)
            if len(path) == v:
                return tuple(path), nodes, False
            cand_lists.append(cands(y))
            cand_pos.append(0)
        else:
            cand_lists.pop()
            cand_pos.pop()
            if len(path) > 1:
                y = path.pop()
                x = path[-1]
                dxy = abs(x - y)
                l = min(dxy, v - dxy) if cyclic else dxy
                visited[y] = 0
                remaining[l] += 1
    return None, nodes, True


def count_realizations(
    lst: EdgeLengthList, mode: str, cap: int = DEFAULT_COUNT_CAP
) -> int:
    """Exact number of realizations with first vertex 0."""
    v = lst.order
    if v > cap:
        raise CapExceededError(f"order {v} exceeds counting cap {cap}")
    if v == 1:
        return 1
    max_len = (v - 1) if mode == "linear" else v // 2
    if lst.pairs and lst.pairs[-1][0] > max_len:
        return 0
    remaining = [0] * (max_len + 1)
    for l, m in lst.pairs:
        remaining[l] = m
    visited = bytearray(v)
    visited[0] = 1
    path = [0]
    cands = _candidate_builder(v, mode, lst.support, remaining, visited, "ascending")
    count = 0
    cand_lists = [cands(0)]
    cand_pos = [0]
    cyclic = mode == "cyclic"
    while cand_lists:
        clist = cand_lists[-1]
        pos = cand_pos[-1]
        if pos < len(clist):
            cand_pos[-1] = pos + 1
            y, l = clist[pos]
            visited[y] = 1
            remaining[l] -= 1
            path.append(y)
            if len(path) == v:
                count += 1
                visited[y] = 0
                remaining[l] += 1
                path.pop()
            else:
                cand_lists.append(cands(y))
                cand_pos.append(0)
        else:
            cand_lists.pop()
            cand_pos.pop()
            if len(path) > 1:
                y = path.pop()
                x = path[-1]
                dxy = abs(x - y)
                l = min(dxy, v - dxy) if cyclic else dxy
                visited[y] = 0
                remaining[l] += 1
    return count


def compositions(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """All t-tuples of nonnegative integers summing to n, lexicographically."""
    if t == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, t - 1):
            yield (first,) + rest


@dataclass(frozen=True, slots=True)
class SweepEntry:
    counts: tuple[int, ...]
    condition_holds: bool
    witness_found: bool
    exhausted: bool
    nodes: int

    @property
    def classification(self) -> str:
        if not self.witness_found and not self.exhausted:
            return "inconclusive"
        if self.condition_holds == self.witness_found:
            return "agree"
        return "violation"


@dataclass(frozen=True, slots=True)
class SweepReport:
    v: int
    total: int
    agreements: int
    realizable: int
    condition_failing: int
    violations: tuple[SweepEntry, ...]
    inconclusive: tuple[SweepEntry, ...]
    nodes: int
    entries: tuple[SweepEntry, ...] = field(default=(), repr=False)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.inconclusive


def _sweep_one(v: int, counts: tuple[int, ...], budget: int) -> SweepEntry:
    from .conditions import condition_two

    lst = EdgeLengthList.from_counts(
        {l: m for l, m in zip(range(1, len(counts) + 1), counts) if m}
    )
    holds = condition_two(lst).holds
    out = search(lst, "cyclic", budget=budget)
    return SweepEntry(
        counts=counts,
        condition_holds=holds,
        witness_found=out.found is not None,
        exhausted=out.exhausted,
        nodes=out.nodes,
    )


def _sweep_chunk(args: tuple) -> list[SweepEntry]:
    v, chunk, budget = args
    return [_sweep_one(v, counts, budget) for counts in chunk]


def _read_checkpoint(path: str, v: int) -> tuple[tuple[int, ...] | None, list[SweepEntry]]:
    if not path or not os.path.exists(path):
        return None, []
    last = None
    entries: list[SweepEntry] = []
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != f"sweep v={v}":
        return None, []
    for line in lines[1:]:
        if line.startswith("entry "):
            tok = line.split()
            counts = tuple(int(x) for x in tok[1].split(","))
            entries.append(
                SweepEntry(
                    counts=counts,
                    condition_holds=tok[2] == "holds",
                    witness_found=tok[3] == "found",
                    exhausted=tok[4] == "exhausted",
                    nodes=int(tok[5]),
                )
            )
            last = counts
    return last, entries


def _append_checkpoint(path: str, v: int, new_entries: list[SweepEntry], fresh: bool) -> None:
    mode = "w" if fresh else "a"
    with open(path, mode, encoding="ascii") as fh:
        if fresh:
            fh.write(f"sweep v={v}\n")
        for e in new_entries:
            fh.write(
                "entry {} {} {} {} {}\n".format(
                    ",".join(str(x) for x in e.counts),
                    "holds" if e.condition_holds else "fails",
                    "found" if e.witness_found else "none",
                    "exhausted" if e.exhausted else "partial",
                    e.nodes,
                )
            )


def sweep_conjecture(
    v: int,
    budget: int = DEFAULT_BUDGET,
    cap: int = DEFAULT_SWEEP_CAP,
    checkpoint_path: str | None = None,
    workers: int = 1,
    keep_entries: bool = False,
) -> SweepReport:
    """Compare the divisor condition with exhaustive cyclic search at order v.

    Every multiset of v-1 lengths from {1..floor(v/2)} is classified; a
    violation in either direction would falsify the underlying conjecture
    (or reveal a bug) and is surfaced in the report.  The sweep is resumable
    through a plain-text checkpoint of per-list entries.
    """
    if v < 2:
        raise ValueError("sweep needs v >= 2")
    if v > cap:
        raise CapExceededError(
            f"order {v} exceeds sweep cap {cap}; pass an explicit cap to opt in"
        )
    t = v // 2
    n = v - 1
    last, entries = (None, [])
    if checkpoint_path:
        last, entries = _read_checkpoint(checkpoint_path, v)
    fresh = not entries

    todo = [c for c in compositions(n, t) if last is None or c > last]
    if workers > 1 and todo:
        from concurrent.futures import ProcessPoolExecutor

        chunk_size = max(1, len(todo) // (workers * 8))
        chunks = [todo[i:i + chunk_size] for i in range(0, len(todo), chunk_size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_sweep_chunk, [(v, ch, budget) for ch in chunks]):
                entries.extend(result)
                if checkpoint_path:
                    _append_checkpoint(checkpoint_path, v, result, fresh)
                    fresh = False
    else:
        batch: list[SweepEntry] = []
        for counts in todo:
            e = _sweep_one(v, counts, budget)
            entries.append(e)
            batch.append(e)
            if checkpoint_path and len(batch) >= 64:
                _append_checkpoint(checkpoint_path, v, batch, fresh)
                fresh = False
                batch = []
        if checkpoint_path and batch:
            _append_checkpoint(checkpoint_path, v, batch, fresh)

    violations = tuple(e for e in entries if e.classification == "violation")
    inconclusive = tuple(e for e in entries if e.classification == "inconclusive")
    return SweepReport(
        v=v,
        total=len(entries),
        agreements=sum(1 for e in entries if e.classification == "agree"),
        realizable=sum(1 for e in entries if e.witness_found),
        condition_failing=sum(1 for e in entries if not e.condition_holds),
        violations=violations,
        inconclusive=inconclusive,
        nodes=sum(e.nodes for e in entries),
        entries=tuple(entries) if keep_entries else (),
    )
