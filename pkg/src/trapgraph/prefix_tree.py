"""Complete binary tree over an array A[1..n] answering point assignment,
prefix sum, and minimum prefix sum, each in O(log n).

Node x stores sum[x] (total of A over x's leaves) and min_sum[x] (minimum
cumulative sum of A over x's leaves, anchored at x's leftmost leaf):

    sum[x]     = sum[2x] + sum[2x+1]
    min_sum[x] = min(min_sum[2x], sum[2x] + min_sum[2x+1])

The tree is laid out in one array with children at 2x and 2x+1; the leaf
for logical index i sits at position i + 2^p - 1 where 2^p is the smallest
power of two >= n.  Values are Python ints, so arbitrarily large sentinels
are safe.
"""

from __future__ import annotations


class MinPrefixTree:
    """Point-assignment array with O(log n) prefix-sum and min-prefix-sum.

    A single instance is single-writer; concurrent reads of a quiescent
    tree are safe.
    """

    __slots__ = ("capacity", "depth", "_leaf_base", "sum", "min_sum")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"capacity must be >= 1, got {n}")
        p = 0
        while (1 << p) < n:
            p += 1
        self.capacity = n
        self.depth = p
        self._leaf_base = 1 << p
        size = 1 << (p + 1)
        self.sum = [0] * size
        self.min_sum = [0] * size

    def _check_index(self, index: int) -> None:
        if not (1 <= index <= self.capacity):
            raise IndexError(f"index {index} outside 1..{self.capacity}")

    def update(self, index: int, value: int) -> None:
        """Assign A[index] = value and refresh the ancestor chain."""
        self._check_index(index)
        s = self.sum
        m = self.min_sum
        i = index + self._leaf_base - 1
        s[i] = value
        m[i] = value
        while i > 1:
            if i & 1:
                i -= 1
            si = s[i] + s[i + 1]
            mi = s[i] + m[i + 1]
            if m[i] < mi:
                mi = m[i]
            i >>= 1
            s[i] = si
            m[i] = mi

    def get(self, index: int) -> int:
        """Current A[index]."""
        self._check_index(index)
        return self.sum[index + self._leaf_base - 1]

    def prefix_sum(self, index: int) -> int:
        """A[1] + ... + A[index]."""
        self._check_index(index)
        s = self.sum
        total = 0
        i = 1
        pow_ = self._leaf_base >> 1
        while pow_ >= 1:
            if index >= pow_:
                total += s[2 * i]
                i = 2 * i + 1
                index -= pow_
                if index == 0:
                    return total
            else:
                i = 2 * i
            pow_ >>= 1
        # descent ended on the leaf holding the final element
        return total + s[i]

    def min_prefix(self, index: int) -> int:
        """min over k in 1..index of A[1] + ... + A[k].

        Top-down descent: whenever the query covers a whole left subtree,
        fold that subtree's min_sum (offset by the running partial sum)
        and continue right.
        """
        self._check_index(index)
        s = self.sum
        m = self.min_sum
        best = None
        partial = 0
        i = 1
        pow_ = self._leaf_base >> 1
        while pow_ >= 1:
            if index >= pow_:
                left = 2 * i
                cand = partial + m[left]
                if best is None or cand < best:
                    best = cand
                partial += s[left]
                i = left + 1
                index -= pow_
                if index == 0:
                    return best
            else:
                i = 2 * i
            pow_ >>= 1
        # one element remains: i is its leaf
        cand = partial + m[i]
        if best is None or cand < best:
            best = cand
        return best

    def _cover_nodes(self, index: int) -> list[int]:
        """Tree positions whose disjoint spans concatenate to [1, index]."""
        self._check_index(index)
        nodes = []
        i = 1
        pow_ = self._leaf_base >> 1
        while pow_ >= 1:
            if index >= pow_:
                nodes.append(2 * i)
                i = 2 * i + 1
                index -= pow_
                if index == 0:
                    return nodes
            else:
                i = 2 * i
            pow_ >>= 1
        nodes.append(i)
        return nodes

    def audit(self) -> None:
        """Recheck both recurrences at every internal node (test hook)."""
        s, m = self.sum, self.min_sum
        for x in range(1, self._leaf_base):
            assert s[x] == s[2 * x] + s[2 * x + 1], f"sum broken at node {x}"
            assert m[x] == min(m[2 * x], s[2 * x] + m[2 * x + 1]), f"min_sum broken at node {x}"
