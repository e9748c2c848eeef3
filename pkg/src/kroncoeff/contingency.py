"""
Counting 3-way contingency arrays with prescribed plane sums.

C(a, b, c) is the number of arrays x[i][j][k] >= 0 with
sum_{j,k} x = a_i, sum_{i,k} x = b_j and sum_{i,j} x = c_k.

The count depends only on the multisets of nonzero entries of a, b and c (a
zero plane sum forces a zero slice, and relabelling an axis permutes one
vector), and is symmetric in the three roles.  The dynamic program below
canonicalizes on exactly that, peels off one slice at a time and finishes
with a 2-d contingency count once a single slice is left.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InputError

DEFAULT_CACHE_CAPACITY = 1 << 20
NAIVE_MAX_TOTAL = 12


def _canon_vec(v) -> tuple:
    return tuple(sorted((x for x in v if x), reverse=True))


def _canon3(a, b, c) -> tuple:
    vs = sorted((_canon_vec(a), _canon_vec(b), _canon_vec(c)),
                key=lambda v: (len(v), v), reverse=True)
    return tuple(vs)


def _bounded_compositions(total: int, caps: tuple) -> Iterator[tuple]:
    """Vectors r with 0 <= r_i <= caps[i] and sum(r) == total."""
    n = len(caps)
    if n == 0:
        if total == 0:
            yield ()
        return
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    if total > suffix[0]:
        return
    cur = [0] * n

    def rec(i, left):
        if i == n - 1:
            cur[i] = left
            yield tuple(cur)
            return
        lo = max(0, left - suffix[i + 1])
        for x in range(lo, min(caps[i], left) + 1):
            cur[i] = x
            yield from rec(i + 1, left - x)

    yield from rec(0, total)


@lru_cache(maxsize=DEFAULT_CACHE_CAPACITY)
def _count2(rows: tuple, cols: tuple) -> int:
    # rows/cols canonical; rows is the longer vector
    if len(cols) <= 1 or len(rows) <= 1:
        return 1
    head, rest = rows[-1], rows[:-1]
    total = 0
    for r in _bounded_compositions(head, cols):
        total += _count2_key(rest, tuple(c - x for c, x in zip(cols, r)))
    return total


def _count2_key(r, s) -> int:
    r, s = _canon_vec(r), _canon_vec(s)
    if len(r) < len(s):
        r, s = s, r
    return _count2(r, s)


def count_2d(r: Sequence[int], s: Sequence[int]) -> int:
    """Number of nonnegative integer matrices with row sums r and column sums s."""
    if any(x < 0 for x in r) or any(x < 0 for x in s) or sum(r) != sum(s):
        return 0
    return _count2_key(r, s)


def _count3_impl(a: tuple, b: tuple, c: tuple) -> int:
    if not a:
        return 1
    if len(a) == 1:
        return _count2_key(b, c)
    head, rest = a[-1], a[:-1]
    total = 0
    for r in _bounded_compositions(head, b):
        b_left = tuple(x - y for x, y in zip(b, r))
        for s in _bounded_compositions(head, c):
            slice_count = _count2_key(r, s)
            if slice_count:
                c_left = tuple(x - y for x, y in zip(c, s))
                total += slice_count * _count3(*_canon3(rest, b_left, c_left))
    return total


_count3 = lru_cache(maxsize=DEFAULT_CACHE_CAPACITY)(_count3_impl)


def set_cache_capacity(capacity) -> None:
    """Rebuild the memo with a new capacity (``None`` means unbounded)."""
    global _count3
    _count3 = lru_cache(maxsize=capacity)(_count3_impl)


def clear_cache() -> None:
    _count3.cache_clear()
    _count2.cache_clear()


def _check_lengths(a, b, c):
    if not (len(a) == len(b) == len(c)):
        raise InputError(f"marginal vectors must share a length, got {len(a)}, {len(b)}, {len(c)}")


def count_tables(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """
    Exact C(a, b, c).  Negative entries or unequal totals give 0 rather than an
    error, since alternating sums routinely produce such marginals.
    """
    _check_lengths(a, b, c)
    if min(list(a) + list(b) + list(c), default=0) < 0:
        return 0
    if not (sum(a) == sum(b) == sum(c)):
        return 0
    return _count3(*_canon3(a, b, c))


def count_tables_naive(a: Sequence[int], b: Sequence[int], c: Sequence[int],
                       max_total: int = NAIVE_MAX_TOTAL) -> int:
    """
    Count by listing every array, one at a time.  Test oracle only: refuses
    totals above ``max_total`` and degenerate marginals.
    """
    _check_lengths(a, b, c)
    if min(list(a) + list(b) + list(c), default=0) < 0:
        raise InputError("naive counter needs nonnegative marginals")
    if not (sum(a) == sum(b) == sum(c)):
        raise InputError("naive counter needs equal totals")
    if sum(a) > max_total:
        raise InputError(f"total {sum(a)} exceeds naive bound {max_total}")
    ell = len(a)
    cells = [(i, j, k) for i in range(ell) for j in range(ell) for k in range(ell)]
    ra, rb, rc = list(a), list(b), list(c)
    count = 0

    def rec(pos):
        nonlocal count
        if pos == len(cells):
            if not any(rb) and not any(rc):
                count += 1
            return
        i, j, k = cells[pos]
        hi = min(ra[i], rb[j], rc[k])
        # the last cell of slice i takes whatever is left of a_i
        lo = ra[i] if (j, k) == (ell - 1, ell - 1) else 0
        for x in range(lo, hi + 1):
            ra[i] -= x
            rb[j] -= x
            rc[k] -= x
            rec(pos + 1)
            ra[i] += x
            rb[j] += x
            rc[k] += x

    rec(0)
    return count
