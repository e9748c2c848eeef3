"""
Integer partitions as immutable, hashable tuples.

A ``Partition`` is a tuple subclass holding weakly decreasing positive parts;
trailing zeros are stripped at construction so that equality and hashing
work on one canonical form.  ``part(i)`` is 1-based and returns 0 beyond the
last stored part.
"""

from __future__ import annotations

from collections import Counter
from itertools import zip_longest
from math import factorial
from typing import Iterable, Iterator, Optional

from .errors import InputError


class Partition(tuple):

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise InputError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise InputError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the textual form ``"3,2,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise InputError(f"cannot parse partition {text!r}: {exc}") from None

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, length: int) -> tuple:
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """True when the Young diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def union(lam: Partition, mu: Partition) -> Partition:
    return Partition(max(a, b) for a, b in zip_longest(lam, mu, fillvalue=0))


def intersect(lam: Partition, mu: Partition) -> Partition:
    return Partition(min(a, b) for a, b in zip_longest(lam, mu, fillvalue=0))


def add(lam: Partition, mu: Partition) -> Partition:
    return Partition(a + b for a, b in zip_longest(lam, mu, fillvalue=0))


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_i i^{m_i} m_i!, so the class of cycle type mu has n!/z_mu elements."""
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * factorial(mult)
    return z


def partitions_of(n: int, max_length: Optional[int] = None,
                  max_part: Optional[int] = None) -> Iterator[Partition]:
    """
    Yield the partitions of ``n`` in decreasing lexicographic order, optionally
    restricted to at most ``max_length`` parts each at most ``max_part``.
    """
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if max_length is None:
        max_length = n
    if max_part is None:
        max_part = n

    def rec(remaining, cap, slots, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for p in range(min(remaining, cap), 0, -1):
            if p * slots < remaining:
                break
            prefix.append(p)
            yield from rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, max_part, max_length, [])
