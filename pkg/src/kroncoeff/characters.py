"""
Irreducible characters of the symmetric group.

``chi`` evaluates the Murnaghan-Nakayama rule by stripping border strips off
the shape, one cycle at a time (largest cycle first).  Strips are located on
the beta-set of the shape: removing a border strip of length r corresponds to
lowering one beta-number by r into an unoccupied slot, and the strip's height
minus one equals the number of beta-numbers jumped over.

Values are memoized in a process-wide map keyed by the canonical (tuple)
forms of the two partitions.  The map can be seeded from and spilled to a
text file of ``lam|mu|value`` records in the comma-separated partition form
(see ``load_cache`` / ``save_cache``).
"""

from __future__ import annotations

import os
import threading
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InputError
from .partitions import Partition

CACHE_ENV_VAR = "KRONCOEFF_CHAR_CACHE"

_cache: dict[tuple, int] = {}
_cache_lock = threading.Lock()


def _strip_removals(lam: tuple, r: int):
    """Yield (sign, smaller_shape) for every border strip of length r in lam."""
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    occupied = set(beta)
    for idx, b in enumerate(beta):
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = 0
        for x in beta:
            if target < x < b:
                jumped += 1
        new_beta = sorted(beta[:idx] + beta[idx + 1:] + [target], reverse=True)
        shape = [x - (L - 1 - i) for i, x in enumerate(new_beta)]
        while shape and shape[-1] == 0:
            shape.pop()
        yield (-1 if jumped % 2 else 1), tuple(shape)


def _chi(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    rest = mu[1:]
    value = 0
    for sign, shape in _strip_removals(lam, mu[0]):
        value += sign * _chi(shape, rest)
    with _cache_lock:
        _cache[key] = value
    return value


def chi(lam: Partition, mu: Partition) -> int:
    """Character value chi^lam at a permutation of cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size() != mu.size():
        raise InputError(f"size mismatch: |{lam}| = {lam.size()}, |{mu}| = {mu.size()}")
    return _chi(lam, tuple(mu))


def subset_count(values: Iterable[int], m: int) -> int:
    """Number of index subsets of ``values`` whose entries sum to ``m``."""
    if m < 0:
        return 0
    ways = [1] + [0] * m
    for v in values:
        for s in range(m, v - 1, -1):
            ways[s] += ways[s - v]
    return ways[m]


def chi_two_row(n: int, k: int, nu: Partition) -> int:
    """
    chi^{(n-k,k)}[nu] = P_X(k) - P_X(k-1), X the multiset of cycle lengths of nu.

    Follows from chi^{(n-k,k)} = ind(h_{n-k} h_k) - ind(h_{n-k+1} h_{k-1}); the
    permutation character of a Young subgroup S_a x S_b at cycle type nu counts
    the ways to split the cycles into groups of total length a and b.
    """
    nu = Partition(nu)
    if nu.size() != n:
        raise InputError(f"|nu| = {nu.size()} but n = {n}")
    if not 0 <= 2 * k <= n:
        raise InputError(f"two-row shape needs 0 <= k <= n/2, got n={n}, k={k}")
    return subset_count(nu, k) - subset_count(nu, k - 1)


def knapsack_to_charp(k: int, a: Sequence[int]) -> tuple[Partition, Partition]:
    """
    Encode a 0/1 knapsack instance as a character-vanishing question.

    Returns (lam, nu) with lam = (n - 2k', 2k'), nu = sorted(2 a_i), n = 2 sum(a)
    and k' = min(k, sum(a) - k); chi^lam[nu] == 0 exactly when no subset of
    ``a`` sums to ``k``.
    """
    if any(x <= 0 for x in a):
        raise InputError(f"knapsack weights must be positive: {list(a)}")
    total = sum(a)
    if not 0 <= k <= total:
        raise InputError(f"knapsack target {k} outside [0, {total}]")
    kk = min(k, total - k)
    n = 2 * total
    return Partition((n - 2 * kk, 2 * kk)), Partition(sorted((2 * x for x in a), reverse=True))


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def load_cache(path) -> int:
    """Merge ``lam|mu|value`` records from ``path`` into the cache; returns records read."""
    path = Path(path)
    if not path.exists():
        return 0
    count = 0
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                lam_s, mu_s, value_s = line.split("|")
                lam, mu = Partition.parse(lam_s), Partition.parse(mu_s)
                value = int(value_s)
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: bad cache record {line!r} ({exc})") from None
            if lam.size() != mu.size():
                raise InputError(f"{path}:{lineno}: size mismatch in {line!r}")
            with _cache_lock:
                _cache[(tuple(lam), tuple(mu))] = value
            count += 1
    return count


def save_cache(path) -> int:
    path = Path(path)
    with _cache_lock:
        items = sorted(_cache.items())
    tmp = path.with_name(path.name + ".tmp")
    with tmp.open("w", encoding="utf-8") as fh:
        for (lam, mu), value in items:
            fh.write(f"{Partition(lam)}|{Partition(mu)}|{value}\n")
    os.replace(tmp, path)
    return len(items)


def cache_path_from_env():
    value = os.environ.get(CACHE_ENV_VAR)
    return Path(value) if value else None
