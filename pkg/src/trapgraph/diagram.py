"""Trapezoid diagrams and their intersection graphs.

A diagram places n trapezoids between two horizontal lines.  Trapezoid i
spans [a[i], b[i]] on the upper line and [c[i], d[i]] on the lower line;
the 2n corner labels on each line are exactly the integers 1..2n, so no
two trapezoids share an endpoint.  Two trapezoids are adjacent in the
intersection graph unless one lies entirely to the left of the other on
both lines.

All vertex and coordinate indices are 1-based; internal arrays carry an
unused slot 0 so code reads the same as the usual algorithm statements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class DiagramError(ValueError):
    """Raised when candidate corner data is not a valid diagram.

    ``violations`` lists every failed check with the offending indices.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _pad(values: Sequence[int]) -> tuple[int, ...]:
    # slot 0 unused so that arr[i] is trapezoid i
    return (0, *values)


@dataclass(frozen=True)
class TrapezoidDiagram:
    """n trapezoids as four 1-based corner arrays (slot 0 unused)."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    @classmethod
    def unchecked(cls, a, b, c, d) -> "TrapezoidDiagram":
        """Build without validation (corner lists are per-trapezoid, 0-based)."""
        return cls(len(a), _pad(a), _pad(b), _pad(c), _pad(d))

    def corners(self, i: int) -> tuple[int, int, int, int]:
        return self.a[i], self.b[i], self.c[i], self.d[i]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def as_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Corner tuples as int64 arrays (still 1-based), cached."""
        return (
            np.asarray(self.a, dtype=np.int64),
            np.asarray(self.b, dtype=np.int64),
            np.asarray(self.c, dtype=np.int64),
            np.asarray(self.d, dtype=np.int64),
        )


def _check_line(left, right, n, line_name, left_name, right_name):
    errors = []
    for i in range(1, n + 1):
        if left[i] >= right[i]:
            errors.append(f"{left_name}[{i}] >= {right_name}[{i}] ({left[i]} >= {right[i]})")
    two_n = 2 * n
    owner = [0] * (two_n + 1)  # packed (index << 1) | side, 0 = unseen
    for side, name, arr in ((0, left_name, left), (1, right_name, right)):
        for i in range(1, n + 1):
            v = arr[i]
            if not (1 <= v <= two_n):
                errors.append(f"{name}[{i}] = {v} outside 1..{two_n}")
                continue
            code = owner[v]
            if code:
                prev_name = left_name if (code & 1) == 0 else right_name
                errors.append(
                    f"duplicate label {v} on {line_name} line "
                    f"({prev_name}[{code >> 1}] and {name}[{i}])"
                )
            else:
                owner[v] = (i << 1) | side
    return errors


def validate(a, b, c, d) -> TrapezoidDiagram:
    """Check all diagram invariants; raise DiagramError naming every violation.

    Inputs are plain per-trapezoid corner sequences (0-based, length n).
    """
    n = len(a)
    if not (len(b) == len(c) == len(d) == n):
        raise DiagramError(["corner arrays differ in length"])
    if n == 0:
        raise DiagramError(["diagram must contain at least one trapezoid"])
    dg = TrapezoidDiagram.unchecked(a, b, c, d)
    errors = _check_line(dg.a, dg.b, n, "upper", "a", "b")
    errors += _check_line(dg.c, dg.d, n, "lower", "c", "d")
    if errors:
        raise DiagramError(errors)
    return dg


def _rank_line(left, right, line_name):
    n = len(left)
    values = list(left) + list(right)
    order = sorted(range(2 * n), key=values.__getitem__)
    rank = [0] * (2 * n)
    for r, idx in enumerate(order, start=1):
        rank[idx] = r
    for k in range(1, 2 * n):
        if values[order[k - 1]] == values[order[k]]:
            raise DiagramError(
                [f"tie on {line_name} line: value {values[order[k]]} appears twice"]
            )
    return rank[:n], rank[n:]


def normalize(a, b, c, d) -> TrapezoidDiagram:
    """Replace each line's coordinates by their ranks 1..2n.

    Accepts arbitrary distinct numeric coordinates per line (left < right per
    trapezoid).  The rank map is strictly monotone, so the intersection graph
    is unchanged.  Ties on a line are rejected.
    """
    ra, rb = _rank_line(list(a), list(b), "upper")
    rc, rd = _rank_line(list(c), list(d), "lower")
    return validate(ra, rb, rc, rd)


@dataclass(frozen=True)
class PointIndex:
    """For each coordinate, the trapezoid owning it: index_up on the upper
    line (via a/b), index_bottom on the lower line (via c/d)."""

    index_up: tuple[int, ...]
    index_bottom: tuple[int, ...]


def build_point_index(dg: TrapezoidDiagram) -> PointIndex:
    up = [0] * (2 * dg.n + 1)
    bottom = [0] * (2 * dg.n + 1)
    for i in dg.vertices():
        up[dg.a[i]] = i
        up[dg.b[i]] = i
        bottom[dg.c[i]] = i
        bottom[dg.d[i]] = i
    return PointIndex(tuple(up), tuple(bottom))


def is_adjacent(dg: TrapezoidDiagram, i: int, j: int) -> bool:
    """True iff trapezoids i and j intersect (neither lies entirely left
    of the other)."""
    if i == j:
        raise ValueError("is_adjacent requires two distinct trapezoids")
    if dg.b[i] < dg.a[j] and dg.d[i] < dg.c[j]:
        return False
    if dg.b[j] < dg.a[i] and dg.d[j] < dg.c[i]:
        return False
    return True


def entirely_left(dg: TrapezoidDiagram, i: int, j: int) -> bool:
    """The strict partial order: trapezoid i lies entirely left of j."""
    return dg.b[i] < dg.a[j] and dg.d[i] < dg.c[j]


class IntersectionGraph:
    """Undirected graph with 1-based vertices and sorted adjacency lists."""

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(neighbors)) for neighbors in adjacency
        )
        self.adj_sets: tuple[frozenset, ...] = tuple(frozenset(s) for s in self.adj)
        self.m = sum(len(s) for s in self.adj[1:]) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "IntersectionGraph":
        adjacency: list[list[int]] = [[] for _ in range(n + 1)]
        seen = set()
        for u, v in edges:
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"bad edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(n, adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def min_degree(self) -> int:
        return min(len(self.adj[v]) for v in self.vertices())

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def intersection_graph(dg: TrapezoidDiagram) -> IntersectionGraph:
    """Materialize the graph by the pairwise adjacency test, O(n^2)."""
    n = dg.n
    a, b, c, d = dg.a, dg.b, dg.c, dg.d
    adjacency: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        bi, di = b[i], d[i]
        ai, ci = a[i], c[i]
        for j in range(i + 1, n + 1):
            if bi < a[j] and di < c[j]:
                continue
            if b[j] < ai and d[j] < ci:
                continue
            adjacency[i].append(j)
            adjacency[j].append(i)
    return IntersectionGraph(n, adjacency)


def _random_pairs(rng: np.random.Generator, n: int) -> tuple[list[int], list[int]]:
    # uniform perfect matching of 1..2n: permute, pair consecutive slots
    points = rng.permutation(2 * n) + 1
    points = points.reshape(n, 2)
    left = points.min(axis=1)
    right = points.max(axis=1)
    return left.tolist(), right.tolist()


def random_diagram(n: int, seed: int) -> TrapezoidDiagram:
    """Deterministic random diagram: independent uniform matchings per line."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    a, b = _random_pairs(rng, n)
    c, d = _random_pairs(rng, n)
    return TrapezoidDiagram.unchecked(a, b, c, d)
