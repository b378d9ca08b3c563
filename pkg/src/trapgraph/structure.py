"""Structural tests for trapezoid graphs.

Two facts drive this module: a trapezoid graph is bipartite exactly when
it has no triangle (long odd cycles force a chord), and the trees
realizable as trapezoid graphs are exactly the caterpillars, each of
which admits an interval-style diagram.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .diagram import IntersectionGraph, TrapezoidDiagram, normalize
from .oracle import connected_components


@dataclass(frozen=True)
class Bipartition:
    """side[v] in {0, 1}; every edge joins side 0 to side 1 (slot 0 unused)."""

    side: tuple[int, ...]

    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        zero = tuple(v for v in range(1, len(self.side)) if self.side[v] == 0)
        one = tuple(v for v in range(1, len(self.side)) if self.side[v] == 1)
        return zero, one


@dataclass(frozen=True)
class OddCycle:
    """Witness against bipartiteness: consecutive vertices (and last-first)
    are adjacent, length is odd."""

    vertices: tuple[int, ...]


def is_bipartite(g: IntersectionGraph) -> Bipartition | OddCycle:
    """Two-color by BFS; on a same-color edge return the odd cycle formed
    by the two endpoints' tree paths."""
    side = [-1] * (g.n + 1)
    parent = [0] * (g.n + 1)
    depth = [0] * (g.n + 1)
    for s in g.vertices():
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif side[w] == side[u] and w != u:
                    return OddCycle(_tree_cycle(parent, depth, u, w))
    side[0] = 0
    return Bipartition(tuple(side))


def _tree_cycle(parent, depth, u, w) -> tuple[int, ...]:
    # paths from u and w up to their lowest common ancestor
    path_u, path_w = [u], [w]
    while depth[path_u[-1]] > depth[path_w[-1]]:
        path_u.append(parent[path_u[-1]])
    while depth[path_w[-1]] > depth[path_u[-1]]:
        path_w.append(parent[path_w[-1]])
    while path_u[-1] != path_w[-1]:
        path_u.append(parent[path_u[-1]])
        path_w.append(parent[path_w[-1]])
    return tuple(path_u + path_w[-2::-1])


def has_triangle(g: IntersectionGraph) -> tuple[int, int, int] | None:
    """Some triangle (i, j, k), or None.  Edge loop with neighbor-set
    intersection; a checker, not a headline algorithm."""
    for u, v in g.edges():
        common = g.adj_sets[u] & g.adj_sets[v]
        if common:
            w = min(common)
            return tuple(sorted((u, v, w)))
    return None


@dataclass(frozen=True)
class CaterpillarDecomposition:
    """spine: a path in the graph; pendants[k]: leaves hanging off spine[k].

    Together they partition the vertex set.
    """

    spine: tuple[int, ...]
    pendants: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.spine) != len(self.pendants):
            raise ValueError("pendants must align with spine")

    def vertex_count(self) -> int:
        return len(self.spine) + sum(len(p) for p in self.pendants)

    def edge_set(self) -> set[tuple[int, int]]:
        edges = set()
        for k in range(len(self.spine) - 1):
            u, v = self.spine[k], self.spine[k + 1]
            edges.add((min(u, v), max(u, v)))
        for k, leaves in enumerate(self.pendants):
            for leaf in leaves:
                u, v = self.spine[k], leaf
                edges.add((min(u, v), max(u, v)))
        return edges

    def reversed(self) -> "CaterpillarDecomposition":
        return CaterpillarDecomposition(self.spine[::-1], self.pendants[::-1])

    def same_up_to_reversal(self, other: "CaterpillarDecomposition") -> bool:
        return self == other or self == other.reversed()


@dataclass(frozen=True)
class CaterpillarRefusal:
    reason: str  # "not a tree" | "tree but not caterpillar"
    detail: str


def is_caterpillar(g: IntersectionGraph) -> CaterpillarDecomposition | CaterpillarRefusal:
    """Recognize caterpillars: a tree whose non-leaf vertices form a path.

    The returned spine is the internal path extended by one leaf at each
    end (smallest-id tie break), so plain paths come back with every
    pendant list empty; the orientation puts the smaller endpoint first.
    """
    n = g.n
    if g.m != n - 1:
        return CaterpillarRefusal("not a tree", f"n = {n} needs {n - 1} edges, found {g.m}")
    if len(connected_components(g)) != 1:
        return CaterpillarRefusal("not a tree", "graph is disconnected")
    if n == 1:
        return CaterpillarDecomposition((1,), ((),))
    if n == 2:
        return CaterpillarDecomposition((1, 2), ((), ()))

    core = [v for v in g.vertices() if g.degree(v) > 1]
    core_set = set(core)
    core_deg = {v: sum(1 for w in g.adj[v] if w in core_set) for v in core}
    if any(cd > 2 for cd in core_deg.values()):
        offender = min(v for v in core if core_deg[v] > 2)
        return CaterpillarRefusal(
            "tree but not caterpillar",
            f"removing leaves keeps vertex {offender} at degree {core_deg[offender]}",
        )

    # order the core as a path
    if len(core) == 1:
        path = list(core)
    else:
        start = min(v for v in core if core_deg[v] == 1)
        path = [start]
        prev = 0
        while True:
            nxt = [w for w in g.adj[path[-1]] if w in core_set and w != prev]
            if not nxt:
                break
            prev = path[-1]
            path.append(nxt[0])

    # extend each end with its smallest leaf neighbor
    left_leaves = sorted(w for w in g.adj[path[0]] if w not in core_set)
    head = left_leaves[0]
    right_leaves = sorted(
        w for w in g.adj[path[-1]] if w not in core_set and w != head
    )
    tail = right_leaves[0]
    spine = [head] + path + [tail]
    if spine[0] > spine[-1]:
        spine.reverse()
    used = set(spine)
    pendants = tuple(
        tuple(sorted(w for w in g.adj[v] if w not in core_set and w not in used))
        for v in spine
    )
    return CaterpillarDecomposition(tuple(spine), pendants)


def caterpillar_to_diagram(cd: CaterpillarDecomposition) -> TrapezoidDiagram:
    """Interval-style diagram realizing the caterpillar.

    Spine vertex k gets the window [4kM, (4k+5)M] on a scratch axis, so
    consecutive windows overlap and windows at distance two do not;
    pendant j of spine k gets a unit interval strictly inside its window's
    private middle.  Rank normalization then yields integer labels.
    """
    n = cd.vertex_count()
    ids = sorted(cd.spine) + sorted(v for leaves in cd.pendants for v in leaves)
    if sorted(ids) != list(range(1, n + 1)):
        raise ValueError("decomposition must cover vertices 1..n exactly once")

    scale = max((len(p) for p in cd.pendants), default=0) + 1
    left = [0] * n
    right = [0] * n
    for k, v in enumerate(cd.spine):
        left[v - 1] = 4 * k * scale
        right[v - 1] = (4 * k + 5) * scale
        for j, leaf in enumerate(cd.pendants[k]):
            left[leaf - 1] = (4 * k + 1) * scale + 2 * j + 1
            right[leaf - 1] = (4 * k + 1) * scale + 2 * j + 2
    return normalize(left, right, left, right)


def random_caterpillar(n: int, seed: int) -> CaterpillarDecomposition:
    """Random caterpillar on vertices 1..n (deterministic per seed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    spine_len = rng.randint(1, n)
    counts = [0] * spine_len
    for _ in range(n - spine_len):
        counts[rng.randrange(spine_len)] += 1
    ids = list(range(1, n + 1))
    rng.shuffle(ids)
    it = iter(ids)
    spine = tuple(next(it) for _ in range(spine_len))
    pendants = tuple(tuple(sorted(next(it) for _ in range(c))) for c in counts)
    return CaterpillarDecomposition(spine, pendants)
