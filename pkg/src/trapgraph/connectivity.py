"""Vertex connectivity of a trapezoid diagram via cut-line minimization.

A vertical cut line through the upper gap (x, x+1) and lower gap (y, y+1)
is *separating* when at least one trapezoid lies entirely on each side.
The connectivity of the intersection graph equals the minimum, over all
separating lines, of the number of trapezoids the line crosses; for
diagrams whose graph is complete no separating line exists and the
connectivity is n - 1 by convention.

Three routes compute that minimum:

* ``n_xy``            - direct O(n) count for one line (the semantic
                        reference used by oracles and witness recovery);
* ``kappa_quadratic`` - per-x sweep over lower coordinates, O(n^2) total;
* ``kappa_fast``      - O(n log n) sweep that keeps the per-y crossing
                        deltas in a MinPrefixTree and answers each x with
                        one minimum-prefix-sum query.  A large negative
                        sentinel planted at the lower coordinate
                        d[leftmost[x]] makes the query ignore y positions
                        where no trapezoid can lie entirely left.

Both sweep algorithms optionally run through numba-compiled kernels for
large inputs; the pure-Python paths are the reference and stay the
default at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .diagram import PointIndex, TrapezoidDiagram, build_point_index
from .prefix_tree import MinPrefixTree

try:
    from . import _kernels
except ImportError:  # pragma: no cover - numba missing
    _kernels = None

# inputs below this size run the pure-Python paths even under engine="auto"
KERNEL_MIN_N = 1024

# extra invariant assertions on the fast sweep (slow; tests flip this on)
DEBUG_CHECKS = False


@dataclass(frozen=True)
class CutLine:
    """Vertical line through upper gap (x, x+1) and lower gap (y, y+1)."""

    x: int
    y: int


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness: tuple[int, ...] | None = None
    achieved_cut: CutLine | None = None


def compute_leftmost(dg: TrapezoidDiagram, pi: PointIndex) -> list[int]:
    """leftmost[x] = trapezoid with b <= x minimizing d, else -1.  O(n)."""
    n2 = 2 * dg.n
    leftmost = [0] * (n2 + 1)
    leftmost[1] = -1
    b, d, up = dg.b, dg.d, pi.index_up
    for j in range(2, n2 + 1):
        i = up[j]
        best = leftmost[j - 1]
        if b[i] == j and (best == -1 or d[best] > d[i]):
            best = i
        leftmost[j] = best
    return leftmost


def compute_rightmost(dg: TrapezoidDiagram, pi: PointIndex) -> list[int]:
    """rightmost[x] = trapezoid with a >= x+1 maximizing c, else -1.  O(n)."""
    n2 = 2 * dg.n
    rightmost = [0] * (n2 + 1)
    rightmost[n2] = -1
    a, c, up = dg.a, dg.c, pi.index_up
    for j in range(n2 - 1, 0, -1):
        i = up[j + 1]
        best = rightmost[j + 1]
        if a[i] == j + 1 and (best == -1 or c[best] < c[i]):
            best = i
        rightmost[j] = best
    return rightmost


def _check_coord(dg: TrapezoidDiagram, v: int, name: str) -> None:
    if not (1 <= v <= 2 * dg.n - 1):
        raise ValueError(f"{name} = {v} outside 1..{2 * dg.n - 1}")


def n_xy(dg: TrapezoidDiagram, line: CutLine) -> int | float:
    """Number of trapezoids crossing the line, or inf if it separates nothing.

    Direct O(n) scan; the semantic reference for both sweep algorithms.
    """
    _check_coord(dg, line.x, "x")
    _check_coord(dg, line.y, "y")
    x, y = line.x, line.y
    a, b, c, d = dg.a, dg.b, dg.c, dg.d
    crossing = 0
    has_left = has_right = False
    for i in range(1, dg.n + 1):
        if b[i] <= x and d[i] <= y:
            has_left = True
        elif a[i] > x and c[i] > y:
            has_right = True
        else:
            crossing += 1
    return crossing if has_left and has_right else math.inf


def crossing_set(dg: TrapezoidDiagram, line: CutLine) -> tuple[int, ...]:
    """Vertices whose trapezoids cross the line; a vertex cut when the
    line is separating and minimizing."""
    x, y = line.x, line.y
    a, b, c, d = dg.a, dg.b, dg.c, dg.d
    out = []
    for i in range(1, dg.n + 1):
        if b[i] <= x and d[i] <= y:
            continue
        if a[i] > x and c[i] > y:
            continue
        out.append(i)
    return tuple(out)


@dataclass
class SweepState:
    """Per-x classification of trapezoids during the upper-line sweep.

    After ``advance`` to coordinate x: cut[i] is True iff trapezoid i spans
    the gap (x, x+1); ``left``/``right`` count trapezoids entirely left/right
    of the gap on the upper line.
    """

    dg: TrapezoidDiagram
    pi: PointIndex
    leftmost: list[int]
    rightmost: list[int]
    x: int = 0
    cut: list[bool] = field(default_factory=list)
    left: int = 0
    right: int = 0

    @classmethod
    def initial(cls, dg: TrapezoidDiagram, pi: PointIndex | None = None) -> "SweepState":
        pi = pi or build_point_index(dg)
        return cls(
            dg=dg,
            pi=pi,
            leftmost=compute_leftmost(dg, pi),
            rightmost=compute_rightmost(dg, pi),
            cut=[False] * (dg.n + 1),
            left=0,
            right=dg.n,
        )

    @classmethod
    def at(cls, dg: TrapezoidDiagram, x: int, pi: PointIndex | None = None) -> "SweepState":
        state = cls.initial(dg, pi)
        while state.x < x:
            state.advance()
        return state

    def advance(self) -> None:
        self.x += 1
        i = self.pi.index_up[self.x]
        if self.dg.a[i] == self.x:
            self.cut[i] = True
            self.right -= 1
        else:  # b[i] == x: the trapezoid is now entirely left of the gap
            self.cut[i] = False
            self.left += 1


def _min_nxy_scan(dg: TrapezoidDiagram, state: SweepState, x: int):
    """(min over separating y of N(x, y), achieving y), or None.

    Walks the lower coordinates once, maintaining
    f(y) = #(left trapezoids with d > y) + #(right trapezoids with c <= y);
    the separating window is d[leftmost[x]] <= y <= c[rightmost[x]] - 1.
    """
    lm = state.leftmost[x]
    rm = state.rightmost[x]
    if lm == -1 or rm == -1:
        return None
    d_lm = dg.d[lm]
    c_rm = dg.c[rm]
    if d_lm >= c_rm:
        return None
    a, b, c, d = dg.a, dg.b, dg.c, dg.d
    bottom = state.pi.index_bottom
    cut = state.cut
    f = state.left
    best = None
    best_y = -1
    for y in range(1, c_rm):
        i = bottom[y]
        if not cut[i]:
            if d[i] == y:
                if b[i] <= x:
                    f -= 1
            elif a[i] > x:
                f += 1
        if y >= d_lm and (best is None or f < best):
            best = f
            best_y = y
    return (dg.n - state.left - state.right) + best, best_y


def min_nxy_for_x(dg: TrapezoidDiagram, state: SweepState, x: int) -> int | None:
    """Minimum N(x, y) over separating y for this x, or None if the upper
    gap (x, x+1) admits no separating line."""
    if state.x != x:
        raise ValueError(f"sweep state is at x={state.x}, not {x}")
    scan = _min_nxy_scan(dg, state, x)
    return None if scan is None else scan[0]


def _resolve_engine(engine: str, n: int) -> str:
    if engine == "python":
        return "python"
    if engine == "numba":
        if _kernels is None:
            raise RuntimeError("numba kernels are unavailable")
        return "numba"
    if engine == "auto":
        return "numba" if (_kernels is not None and n >= KERNEL_MIN_N) else "python"
    raise ValueError(f"unknown engine {engine!r}")


def _result(dg, best, best_x, witness):
    n = dg.n
    if best is None:
        # no separating line anywhere: the graph is complete
        return ConnectivityResult(n - 1, None, None)
    if not witness:
        return ConnectivityResult(best)
    state = SweepState.at(dg, best_x)
    value, best_y = _min_nxy_scan(dg, state, best_x)
    assert value == best, "sweep disagrees with its own rescan"
    line = CutLine(best_x, best_y)
    return ConnectivityResult(best, crossing_set(dg, line), line)


def kappa_quadratic(dg: TrapezoidDiagram, witness: bool = False,
                    engine: str = "auto") -> ConnectivityResult:
    """Connectivity by running the per-x lower-line scan at every x.  O(n^2)."""
    n = dg.n
    if _resolve_engine(engine, n) == "numba":
        best, best_x = _kernels.quadratic_sweep(*_kernels.pack(dg))
        return _result(dg, None if best < 0 else best, best_x, witness)
    state = SweepState.initial(dg)
    best = None
    best_x = -1
    for x in range(1, 2 * n):
        state.advance()
        scan = _min_nxy_scan(dg, state, x)
        if scan is not None and (best is None or scan[0] < best):
            best, best_x = scan[0], x
    return _result(dg, best, best_x, witness)


def kappa_fast(dg: TrapezoidDiagram, witness: bool = False,
               engine: str = "auto") -> ConnectivityResult:
    """Connectivity in O(n log n): one upper-line sweep over a MinPrefixTree.

    The tree spans the 2n lower coordinates.  A right trapezoid contributes
    +1 at its c, a left trapezoid -1 at its d, a spanning trapezoid nothing;
    prefix sums then equal f(y) - left, so one minimum-prefix query per x
    yields min over y of N(x, y) after the sentinel correction.
    """
    n = dg.n
    if _resolve_engine(engine, n) == "numba":
        best, best_x = _kernels.fast_sweep(*_kernels.pack(dg))
        return _result(dg, None if best < 0 else best, best_x, witness)

    pi = build_point_index(dg)
    leftmost = compute_leftmost(dg, pi)
    rightmost = compute_rightmost(dg, pi)
    a, b, c, d = dg.a, dg.b, dg.c, dg.d
    tree = MinPrefixTree(2 * n)
    for i in range(1, n + 1):
        tree.update(c[i], 1)
        tree.update(d[i], 0)
    right = n
    sentinel = -(n * n) - 1
    best = None
    best_x = -1
    for x in range(1, 2 * n):
        i = pi.index_up[x]
        if a[i] == x:
            # entering trapezoid: right -> spanning
            right -= 1
            tree.update(c[i], 0)
            tree.update(d[i], 0)
        else:
            # b[i] == x, leaving trapezoid: spanning -> left
            tree.update(c[i], 0)
            tree.update(d[i], -1)
        lm = leftmost[x]
        if x > 1 and leftmost[x - 1] != -1:
            tree.update(d[leftmost[x - 1]], -1)
        if lm != -1:
            tree.update(d[lm], sentinel)
        rm = rightmost[x]
        if lm != -1 and rm != -1:
            candidate = tree.min_prefix(c[rm]) + n * n + (n - right)
            if DEBUG_CHECKS and d[lm] > 1:
                # every prefix sum left of the sentinel is nonnegative, so a
                # minimum landing there could never pass the <= n filter
                assert tree.min_prefix(d[lm] - 1) >= 0
            if candidate <= n and (best is None or candidate < best):
                best, best_x = candidate, x
    return _result(dg, best, best_x, witness)
