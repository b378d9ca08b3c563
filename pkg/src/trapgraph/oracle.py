"""Brute-force reference implementations used to validate the fast paths.

Nothing here is performance-sensitive: these routines exist so that every
optimized algorithm in the package has an independent answer to agree
with at desk scale.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import accumulate, combinations

from .connectivity import CutLine, n_xy
from .diagram import IntersectionGraph, TrapezoidDiagram


class NaiveMinPrefix:
    """Plain array with O(n)-scan queries; the MinPrefixTree's co-execution
    partner."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"capacity must be >= 1, got {n}")
        self.capacity = n
        self.values = [0] * (n + 1)

    def _check(self, index):
        if not (1 <= index <= self.capacity):
            raise IndexError(f"index {index} outside 1..{self.capacity}")

    def update(self, index: int, value: int) -> None:
        self._check(index)
        self.values[index] = value

    def prefix_sum(self, index: int) -> int:
        self._check(index)
        return sum(self.values[1 : index + 1])

    def min_prefix(self, index: int) -> int:
        self._check(index)
        return min(accumulate(self.values[1 : index + 1]))


# ---------------------------------------------------------------------------
# graph-level connectivity


def connected_components(g: IntersectionGraph, removed=()) -> list[list[int]]:
    """Components among the vertices outside ``removed``."""
    removed = set(removed)
    seen = set(removed)
    components = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def is_vertex_cut(g: IntersectionGraph, cut) -> bool:
    """True when removing ``cut`` leaves at least two components."""
    return len(connected_components(g, cut)) >= 2


_INF_CAP = 1 << 30


class FlowNetwork:
    """Split-vertex unit-capacity network: v becomes v_in -> v_out with
    capacity 1, every graph edge becomes two uncapped out->in arcs.  Max
    flow from s_out to t_in counts internally vertex-disjoint s-t paths."""

    def __init__(self, g: IntersectionGraph):
        self.size = 2 * g.n + 2
        self.head: list[list[int]] = [[] for _ in range(self.size)]
        self.to: list[int] = []
        self.cap: list[int] = []
        for v in g.vertices():
            self._arc(2 * v, 2 * v + 1, 1)
        for u, v in g.edges():
            self._arc(2 * u + 1, 2 * v, _INF_CAP)
            self._arc(2 * v + 1, 2 * u, _INF_CAP)
        self._base_cap = list(self.cap)

    def _arc(self, u, v, capacity):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, cutoff: int | None = None) -> int:
        """Augmenting-path flow from s_out to t_in, stopping at ``cutoff``."""
        self.cap[:] = self._base_cap
        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while cutoff is None or flow < cutoff:
            parent_arc = [-1] * self.size
            parent_arc[source] = -2
            queue = deque([source])
            reached = False
            while queue and not reached:
                u = queue.popleft()
                for eid in self.head[u]:
                    if self.cap[eid] > 0 and parent_arc[self.to[eid]] == -1:
                        parent_arc[self.to[eid]] = eid
                        if self.to[eid] == sink:
                            reached = True
                            break
                        queue.append(self.to[eid])
            if not reached:
                break
            v = sink
            while v != source:
                eid = parent_arc[v]
                self.cap[eid] -= 1
                self.cap[eid ^ 1] += 1
                v = self.to[eid ^ 1]
            flow += 1
        return flow


def _kappa_maxflow_pair(g: IntersectionGraph):
    """(kappa, achieving non-adjacent pair) via disjoint-path counting.

    Every minimum cut separates some non-adjacent pair, and if it contains
    the pivot vertex it separates two of the pivot's non-adjacent
    neighbors, so flowing over those pairs suffices.
    """
    pivot = min(g.vertices(), key=g.degree)
    best = g.degree(pivot) + 1  # kappa <= min degree, so some pair improves
    best_pair = None
    network = FlowNetwork(g)
    closed = g.adj_sets[pivot] | {pivot}
    candidates = [(pivot, w) for w in g.vertices() if w not in closed]
    candidates += [
        (u, w) for u, w in combinations(g.adj[pivot], 2) if not g.has_edge(u, w)
    ]
    for u, w in candidates:
        if best == 0:
            break
        flow = network.max_flow(u, w, cutoff=best)
        if flow < best:
            best, best_pair = flow, (u, w)
    return best, best_pair


def kappa_maxflow(g: IntersectionGraph) -> int:
    if g.is_complete():
        return g.n - 1
    return _kappa_maxflow_pair(g)[0]


def min_vertex_cut(g: IntersectionGraph) -> tuple[int, ...] | None:
    """A smallest vertex cut, or None for complete graphs.

    Reruns the flow for the minimizing pair and reads the cut off the
    residual network: vertices whose internal arc is saturated on the
    source side of the reachability frontier.
    """
    if g.is_complete():
        return None
    kappa, (s, t) = _kappa_maxflow_pair(g)
    network = FlowNetwork(g)
    flow = network.max_flow(s, t)
    assert flow == kappa
    reachable = {2 * s + 1}
    queue = deque([2 * s + 1])
    while queue:
        u = queue.popleft()
        for eid in network.head[u]:
            if network.cap[eid] > 0 and network.to[eid] not in reachable:
                reachable.add(network.to[eid])
                queue.append(network.to[eid])
    cut = tuple(
        v for v in g.vertices() if 2 * v in reachable and 2 * v + 1 not in reachable
    )
    assert len(cut) == kappa
    return cut


def kappa_subsets(g: IntersectionGraph) -> int:
    """Smallest k such that deleting some k vertices disconnects the rest.

    Exponential; only for cross-checking tiny instances.
    """
    if g.n > 16:
        raise ValueError("subset enumeration is limited to n <= 16")
    if g.is_complete():
        return g.n - 1
    for k in range(0, g.n - 1):
        for subset in combinations(g.vertices(), k):
            if is_vertex_cut(g, subset):
                return k
    return g.n - 1  # unreachable for non-complete graphs


def kappa_bruteforce(g: IntersectionGraph) -> int:
    """Graph-level connectivity oracle (flow-based, subset-checked when tiny)."""
    flow = kappa_maxflow(g)
    if g.n <= 12:
        subsets = kappa_subsets(g)
        assert flow == subsets, f"flow oracle {flow} != subset oracle {subsets}"
    return flow


def kappa_cutline_bruteforce(dg: TrapezoidDiagram) -> int:
    """Minimum crossing count over every cut line; n - 1 when none separates."""
    best = math.inf
    for x in range(1, 2 * dg.n):
        for y in range(1, 2 * dg.n):
            best = min(best, n_xy(dg, CutLine(x, y)))
    return dg.n - 1 if math.isinf(best) else best


# ---------------------------------------------------------------------------
# cycle enumeration (small graphs only)


def simple_cycles(g: IntersectionGraph) -> list[tuple[int, ...]]:
    """Every simple cycle, listed once, starting at its smallest vertex."""
    cycles = []
    adj = g.adj

    def extend(start, path, on_path):
        u = path[-1]
        for w in adj[u]:
            if w == start:
                if len(path) >= 3 and path[1] < u:
                    cycles.append(tuple(path))
            elif w > start and w not in on_path:
                on_path.add(w)
                path.append(w)
                extend(start, path, on_path)
                path.pop()
                on_path.remove(w)

    for start in g.vertices():
        extend(start, [start], {start})
    return cycles


def has_odd_cycle(g: IntersectionGraph) -> bool:
    return any(len(cycle) % 2 == 1 for cycle in simple_cycles(g))


def is_chordless(g: IntersectionGraph, cycle) -> bool:
    k = len(cycle)
    for s in range(k):
        for t in range(s + 2, k):
            if s == 0 and t == k - 1:
                continue  # cycle edge, not a chord
            if g.has_edge(cycle[s], cycle[t]):
                return False
    return True


def chordless_cycles(g: IntersectionGraph, min_length: int = 4) -> list[tuple[int, ...]]:
    return [cy for cy in simple_cycles(g) if len(cy) >= min_length and is_chordless(g, cy)]


# ---------------------------------------------------------------------------
# geometric adjacency


def _axes(quad):
    for k in range(4):
        x1, y1 = quad[k]
        x2, y2 = quad[(k + 1) % 4]
        yield y1 - y2, x2 - x1


def _quad(dg, i):
    return (
        (dg.a[i], 1),
        (dg.b[i], 1),
        (dg.d[i], 0),
        (dg.c[i], 0),
    )


def trapezoids_intersect_geometric(dg: TrapezoidDiagram, i: int, j: int) -> bool:
    """Closed-polygon intersection by separating-axis test, exact integers."""
    p, q = _quad(dg, i), _quad(dg, j)
    for quad in (p, q):
        for ax, ay in _axes(quad):
            p_dots = [x * ax + y * ay for x, y in p]
            q_dots = [x * ax + y * ay for x, y in q]
            if max(p_dots) < min(q_dots) or max(q_dots) < min(p_dots):
                return False
    return True
