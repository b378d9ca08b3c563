"""Compiled int64 kernels for the two connectivity sweeps.

Mirrors the pure-Python paths in ``connectivity`` exactly; used for large
inputs where interpreter overhead would dominate.  Candidate values fit in
int64 comfortably (magnitudes stay near n^2 with n up to a few million).
"""

from __future__ import annotations

import numpy as np
from numba import njit

_NO_VALUE = 1 << 62


def pack(dg):
    """Padded 1-based corner arrays as int64 for the kernels."""
    return (dg.n, *dg.as_arrays)


@njit(cache=True)
def _upper_index(n, a, b):
    up = np.zeros(2 * n + 1, np.int64)
    for i in range(1, n + 1):
        up[a[i]] = i
        up[b[i]] = i
    return up


@njit(cache=True)
def _lower_index(n, c, d):
    bottom = np.zeros(2 * n + 1, np.int64)
    for i in range(1, n + 1):
        bottom[c[i]] = i
        bottom[d[i]] = i
    return bottom


@njit(cache=True)
def _leftmost(n, b, d, up):
    out = np.zeros(2 * n + 1, np.int64)
    out[1] = -1
    for j in range(2, 2 * n + 1):
        i = up[j]
        best = out[j - 1]
        if b[i] == j and (best == -1 or d[best] > d[i]):
            best = i
        out[j] = best
    return out


@njit(cache=True)
def _rightmost(n, a, c, up):
    out = np.zeros(2 * n + 1, np.int64)
    out[2 * n] = -1
    for j in range(2 * n - 1, 0, -1):
        i = up[j + 1]
        best = out[j + 1]
        if a[i] == j + 1 and (best == -1 or c[best] < c[i]):
            best = i
        out[j] = best
    return out


@njit(cache=True)
def _assign(s, m, leaf_base, index, value):
    i = index + leaf_base - 1
    if s[i] == value and m[i] == value:
        return
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
        if s[i] == si and m[i] == mi:
            return  # ancestors depend only on this pair; nothing changed
        s[i] = si
        m[i] = mi


@njit(cache=True)
def _min_prefix(s, m, leaf_base, index):
    best = _NO_VALUE
    partial = 0
    i = 1
    pw = leaf_base >> 1
    while pw >= 1:
        if index >= pw:
            left = 2 * i
            cand = partial + m[left]
            if cand < best:
                best = cand
            partial += s[left]
            i = left + 1
            index -= pw
            if index == 0:
                return best
        else:
            i = 2 * i
        pw >>= 1
    cand = partial + m[i]
    if cand < best:
        best = cand
    return best


@njit(cache=True)
def fast_sweep(n, a, b, c, d):
    """O(n log n) sweep; returns (kappa, achieving x), kappa = -1 when no
    separating line exists (complete graph)."""
    two_n = 2 * n
    up = _upper_index(n, a, b)
    leftmost = _leftmost(n, b, d, up)
    rightmost = _rightmost(n, a, c, up)

    p = 0
    while (1 << p) < two_n:
        p += 1
    leaf_base = 1 << p
    s = np.zeros(2 * leaf_base, np.int64)
    m = np.zeros(2 * leaf_base, np.int64)
    for i in range(1, n + 1):
        _assign(s, m, leaf_base, c[i], 1)

    right = n
    nn = n * n
    sentinel = -nn - 1
    best = -1
    best_x = -1
    for x in range(1, two_n):
        i = up[x]
        if a[i] == x:
            right -= 1
            _assign(s, m, leaf_base, c[i], 0)
            _assign(s, m, leaf_base, d[i], 0)
        else:
            _assign(s, m, leaf_base, c[i], 0)
            _assign(s, m, leaf_base, d[i], -1)
        lm = leftmost[x]
        prev = leftmost[x - 1] if x > 1 else -1
        if lm != prev:
            # the event at x never touches d[prev], so when lm == prev the
            # restore+replant pair is a provable no-op and is skipped
            if prev != -1:
                _assign(s, m, leaf_base, d[prev], -1)
            if lm != -1:
                _assign(s, m, leaf_base, d[lm], sentinel)
        if lm != -1:
            rm = rightmost[x]
            if rm != -1:
                cand = _min_prefix(s, m, leaf_base, c[rm]) + nn + (n - right)
                if cand <= n and (best == -1 or cand < best):
                    best = cand
                    best_x = x
    return best, best_x


@njit(cache=True)
def quadratic_sweep(n, a, b, c, d):
    """O(n^2) sweep; same return convention as fast_sweep."""
    two_n = 2 * n
    up = _upper_index(n, a, b)
    bottom = _lower_index(n, c, d)
    leftmost = _leftmost(n, b, d, up)
    rightmost = _rightmost(n, a, c, up)

    cut = np.zeros(n + 1, np.bool_)
    left = 0
    right = n
    best = -1
    best_x = -1
    for x in range(1, two_n):
        i = up[x]
        if a[i] == x:
            cut[i] = True
            right -= 1
        else:
            cut[i] = False
            left += 1
        lm = leftmost[x]
        rm = rightmost[x]
        if lm == -1 or rm == -1:
            continue
        d_lm = d[lm]
        c_rm = c[rm]
        if d_lm >= c_rm:
            continue
        f = left
        window_min = _NO_VALUE
        for y in range(1, c_rm):
            j = bottom[y]
            if not cut[j]:
                if d[j] == y:
                    if b[j] <= x:
                        f -= 1
                elif a[j] > x:
                    f += 1
            if y >= d_lm and f < window_min:
                window_min = f
        total = (n - left - right) + window_min
        if best == -1 or total < best:
            best = total
            best_x = x
    return best, best_x


def warmup() -> None:
    """Force JIT compilation on a toy input (one-time cost per process)."""
    a = np.array([0, 1, 3], dtype=np.int64)
    b = np.array([0, 2, 4], dtype=np.int64)
    fast_sweep(2, a, b, a, b)
    quadratic_sweep(2, a, b, a, b)
