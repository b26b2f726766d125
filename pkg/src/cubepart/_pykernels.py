"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module, which is
preferred when it is importable.
"""

from __future__ import annotations

import sys

NAME = "python"


def ryser_partial(col_rows, n, start, stop):
    """Signed Ryser sum over Gray-code indices ``start <= i < stop``.

    ``col_rows[j]`` lists the rows with a 1 in column j of an n x n 0/1
    matrix.  The subset visited at index i is the Gray code ``i ^ (i >> 1)``;
    each contributes ``(-1)^|S| * prod_r rowsum_r(S)``.  Summing over
    ``[0, 2^n)`` and multiplying by ``(-1)^n`` gives the permanent.

    Row sums are tracked as a histogram so each step costs O(column degree)
    plus one product over the distinct row-sum values.
    """
    if start >= stop:
        return 0
    rowsum = [0] * n
    g = start ^ (start >> 1)
    size = 0
    for j in range(n):
        if g >> j & 1:
            size += 1
            for r in col_rows[j]:
                rowsum[r] += 1
    hist = [0] * (n + 1)
    for s in rowsum:
        hist[s] += 1
    total = 0

    def term():
        if hist[0]:
            return 0
        prod = 1
        for k in range(2, n + 1):
            if hist[k]:
                prod *= k ** hist[k]
        return -prod if size & 1 else prod

    total += term()
    for i in range(start + 1, stop):
        j = (i & -i).bit_length() - 1
        if g >> j & 1:
            g ^= 1 << j
            size -= 1
            for r in col_rows[j]:
                s = rowsum[r]
                hist[s] -= 1
                hist[s - 1] += 1
                rowsum[r] = s - 1
        else:
            g ^= 1 << j
            size += 1
            for r in col_rows[j]:
                s = rowsum[r]
                hist[s] -= 1
                hist[s + 1] += 1
                rowsum[r] = s + 1
        if hist[0]:
            continue
        total += term()
    return total


class _Counter:
    def __init__(self, nvert, cands):
        self.full = (1 << nvert) - 1
        self.cands = cands
        self.memo = {}

    def count(self, covered):
        if covered == self.full:
            return 1
        hit = self.memo.get(covered)
        if hit is not None:
            return hit
        low = ~covered & (covered + 1)
        v = low.bit_length() - 1
        total = 0
        for m in self.cands[v]:
            if not m & covered:
                total += self.count(covered | m)
        self.memo[covered] = total
        return total


def count_cover(nvert, cands, covered=0, memo_bits=0):
    """Number of ways to tile the uncovered vertices with candidate sets.

    ``cands[v]`` holds the vertex bitsets of the allowed pieces whose lowest
    vertex is v.  The lowest uncovered vertex is always branched on, so the
    covered bitset alone determines the remaining subproblem and serves as
    the memo key.  ``memo_bits`` is accepted for signature parity and ignored.
    """
    limit = sys.getrecursionlimit()
    if limit < nvert + 100:
        sys.setrecursionlimit(nvert + 100)
    return _Counter(nvert, cands).count(covered)
