"""
Littlewood-Richardson coefficients c^lam_{mu,nu}.

``lr_coefficient`` counts LR tableaux directly: semistandard fillings of the
skew shape lam/mu with content nu whose reverse row reading word (rows top to
bottom, each right to left) is a ballot sequence.  The other two routes go
through Kronecker coefficients by prepending a long first row to each of the
three partitions.
"""

from __future__ import annotations

from typing import Optional

from . import kron
from .errors import InputError, InvariantError
from .hooks import is_ballot
from .partitions import Partition, partitions_of

METHODS = ("direct", "reduction", "embedding")


def lr_coefficient(lam, mu, nu) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size() != mu.size() + nu.size() or not lam.contains(mu):
        return 0
    cells = [(r, c) for r in range(len(lam)) for c in range(lam.part(r + 1) - 1, mu.part(r + 1) - 1, -1)]
    filling = {}
    left = list(nu)
    counts = [0] * (len(nu) + 1)
    total = 0

    def rec(pos):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        r, c = cells[pos]
        hi = filling.get((r, c + 1), len(nu))   # row weakly increasing
        lo = filling.get((r - 1, c), 0) + 1     # column strictly increasing
        for v in range(lo, hi + 1):
            if not left[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            left[v - 1] -= 1
            counts[v] += 1
            rec(pos + 1)
            counts[v] -= 1
            left[v - 1] += 1
            del filling[(r, c)]

    rec(0)
    return total


def lr_tableaux_words(lam, mu, nu):
    """Reverse reading words of all semistandard fillings of lam/mu with content nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    rows = [list(range(mu.part(r + 1), lam.part(r + 1))) for r in range(len(lam))]
    cells = [(r, c) for r, cs in enumerate(rows) for c in cs]
    grid = {}
    left = list(nu)

    def rec(pos):
        if pos == len(cells):
            yield tuple(grid[(r, c)] for r, cs in enumerate(rows) for c in reversed(cs))
            return
        r, c = cells[pos]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        for v in range(lo, len(nu) + 1):
            if left[v - 1]:
                grid[(r, c)] = v
                left[v - 1] -= 1
                yield from rec(pos + 1)
                left[v - 1] += 1
                del grid[(r, c)]

    if lam.size() == mu.size() + nu.size() and lam.contains(mu):
        yield from rec(0)


def lr_coefficient_bruteforce(lam, mu, nu) -> int:
    """Same count, enumerating every semistandard filling and filtering on the ballot test."""
    return sum(1 for w in lr_tableaux_words(lam, mu, nu) if is_ballot(w))


def pieri_expand(strip_length: int, pi) -> set:
    """Partitions obtained from pi by adding a horizontal strip of the given length."""
    pi = Partition(pi)
    out = set()
    ell = len(pi)
    grown = [0] * (ell + 1)

    def rec(i, left):
        if i == ell + 1:
            if left == 0:
                out.add(Partition(grown))
            return
        base = pi.part(i + 1)
        cap = left if i == 0 else min(left, pi.part(i) - base)
        for extra in range(cap, -1, -1):
            grown[i] = base + extra
            rec(i + 1, left - extra)

    if strip_length >= 0:
        rec(0, strip_length)
    return out


def murnaghan_embedding(lam, mu, nu, n: int, method: str = "auto") -> int:
    """g((n-|lam|, lam), (n-|mu|, mu), (n-|nu|, nu))."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size() != mu.size() + nu.size():
        raise InputError(f"need |lam| = |mu| + |nu|, got {lam.size()} vs {mu.size()} + {nu.size()}")
    return kron.compute(kron.pad_first_row(lam, n), kron.pad_first_row(mu, n),
                        kron.pad_first_row(nu, n), method)


def early_zero_row(lam, mu, nu) -> Optional[int]:
    """1-based row i with |lam_i - mu_i| > |nu|, if any (then c^lam_{mu,nu} = 0)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    for i in range(1, max(len(lam), len(mu)) + 1):
        if abs(lam.part(i) - mu.part(i)) > nu.size():
            return i
    return None


def lr_via_reduction(lam, mu, nu, check_stability: bool = False) -> int:
    """
    Early-zero test, then the embedding at the stable n through the auto
    pipeline.  With ``check_stability`` the value at n + 1 is computed too and
    a mismatch raises InvariantError.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size() != mu.size() + nu.size():
        return 0
    if early_zero_row(lam, mu, nu) is not None:
        return 0
    n = kron.stable_n(lam, mu, nu)
    value = murnaghan_embedding(lam, mu, nu, n)
    if check_stability:
        again = murnaghan_embedding(lam, mu, nu, n + 1)
        if again != value:
            raise InvariantError(f"embedding not stable for ({lam}; {mu}; {nu}): "
                                 f"{value} at n={n}, {again} at n={n + 1}")
    return value


def compute_lr(lam, mu, nu, method: str = "direct") -> int:
    if method == "direct":
        return lr_coefficient(lam, mu, nu)
    if method == "reduction":
        return lr_via_reduction(lam, mu, nu)
    if method == "embedding":
        lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
        if lam.size() != mu.size() + nu.size():
            return 0
        return murnaghan_embedding(lam, mu, nu, kron.stable_n(lam, mu, nu))
    raise InputError(f"unknown LR method {method!r}; expected one of {METHODS}")


# -- restriction identity ------------------------------------------------------
# <s_lam * s_mu, h_{n-r} s_pi> computed two ways, pi |- r.

def littlewood_side(lam, mu, pi) -> int:
    """sum over alpha |- n-r and beta, gamma |- r of c^lam_{alpha beta} c^mu_{alpha gamma} g(beta, pi, gamma)."""
    lam, mu, pi = Partition(lam), Partition(mu), Partition(pi)
    n, r = lam.size(), pi.size()
    if mu.size() != n or r > n:
        raise InputError(f"need |lam| = |mu| >= |pi|, got {n}, {mu.size()}, {r}")
    small = list(partitions_of(r))
    total = 0
    for alpha in partitions_of(n - r):
        left = [(beta, lr_coefficient(lam, alpha, beta)) for beta in small]
        right = [(gamma, lr_coefficient(mu, alpha, gamma)) for gamma in small]
        for beta, cb in left:
            if not cb:
                continue
            for gamma, cg in right:
                if cg:
                    total += cb * cg * kron.kron_via_characters(beta, pi, gamma)
    return total


def pieri_side(lam, mu, pi) -> int:
    """sum of g(lam, mu, eta) over eta in pieri_expand(n - r, pi)."""
    lam, mu, pi = Partition(lam), Partition(mu), Partition(pi)
    n = lam.size()
    if mu.size() != n or pi.size() > n:
        raise InputError(f"need |lam| = |mu| >= |pi|, got {n}, {mu.size()}, {pi.size()}")
    return sum(kron.kron_via_characters(lam, mu, eta) for eta in pieri_expand(n - pi.size(), pi))
