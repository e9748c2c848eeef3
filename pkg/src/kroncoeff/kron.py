"""
Kronecker coefficients g(lam, mu, nu) of the symmetric group.

Three routes are provided and must agree:

* ``kron_via_characters`` -- the class-sum formula
  g = sum_rho chi^lam[rho] chi^mu[rho] chi^nu[rho] / z_rho.
* ``kron_via_tables`` -- extract the coefficient of s_alpha(x) s_beta(y) s_gamma(z)
  in prod 1/(1 - x_i y_j z_k) by multiplying with three Vandermonde
  determinants, which turns g into a signed sum of 3-way contingency counts
  over triples of permutations.
* ``compute(method="auto")`` -- symmetry-based role assignment, the
  length-product vanishing test, the reduction map and then the table sum.

Exponent convention for the table sum: expanding
Delta(x) = det[x_i^(ell-j)] = sum_sigma sgn(sigma) prod_i x_i^(ell - sigma(i))
and reading off [x^(alpha + delta)] leaves plane sums
alpha_i - i + sigma(i)  (1-based i).  The mirror reading alpha_i + i - sigma(i)
disagrees with the character oracle already for g((2,1),(2,1),(2,1)); both
are kept selectable so the tests can show that.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Optional, Union

from . import contingency
from .characters import _chi
from .errors import InputError, InvariantError
from .partitions import Partition, centralizer_order, conjugate, intersect, partitions_of, union

SHIFT_CONVENTIONS = ("vandermonde", "mirrored")
SHIFT_CONVENTION = "vandermonde"

# auto: use the character oracle for small n when ell! ** 3 would dominate
ORACLE_MAX_N = 12
ORACLE_MIN_LENGTH = 5

METHODS = ("oracle", "tables", "auto")


def _triple(lam, mu, nu):
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size()
    if mu.size() != n or nu.size() != n:
        raise InputError(f"sizes differ: |{lam}|={n}, |{mu}|={mu.size()}, |{nu}|={nu.size()}")
    return lam, mu, nu, n


@lru_cache(maxsize=64)
def _classes(n: int) -> tuple:
    """(cycle type, class size) for every conjugacy class of S_n."""
    nfact = factorial(n)
    return tuple((tuple(rho), nfact // centralizer_order(rho)) for rho in partitions_of(n))


def kron_via_characters(lam, mu, nu) -> int:
    lam, mu, nu, n = _triple(lam, mu, nu)
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    total = 0
    for rho, size in _classes(n):
        x = _chi(lam, rho)
        if x:
            y = _chi(mu, rho)
            if y:
                total += x * y * _chi(nu, rho) * size
    g, rem = divmod(total, factorial(n))
    if rem or g < 0:
        raise InvariantError(f"character sum {total} / {n}! is not a nonnegative integer "
                             f"for ({Partition(lam)}; {Partition(mu)}; {Partition(nu)})")
    return g


# -- alternating contingency sum ---------------------------------------------

def _sign(perm: tuple) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def shifted_marginals(alpha: tuple, perm: tuple, convention: str = SHIFT_CONVENTION) -> tuple:
    """Plane-sum vector for one permutation term; ``perm`` holds sigma(1..ell) (1-based)."""
    if convention == "vandermonde":
        return tuple(a - i + s for i, (a, s) in enumerate(zip(alpha, perm), 1))
    if convention == "mirrored":
        return tuple(a + i - s for i, (a, s) in enumerate(zip(alpha, perm), 1))
    raise InputError(f"unknown shift convention {convention!r}")


@lru_cache(maxsize=None)
def _signed_vectors(alpha: tuple, convention: str) -> tuple:
    """
    (sign, vector) for every permutation whose shifted vector is nonnegative;
    the rest contribute zero.  Backtracks on sigma(i) so dead branches are cut early.
    """
    ell = len(alpha)
    out = []
    perm = [0] * ell
    used = [False] * (ell + 1)

    def rec(i):
        if i == ell:
            p = tuple(perm)
            out.append((_sign(p), shifted_marginals(alpha, p, convention)))
            return
        for s in range(1, ell + 1):
            if used[s]:
                continue
            pos = i + 1
            val = alpha[i] - pos + s if convention == "vandermonde" else alpha[i] + pos - s
            if val < 0:
                continue
            used[s] = True
            perm[i] = s
            rec(i + 1)
            used[s] = False

    rec(0)
    return tuple(out)


def _grouped(alpha: tuple, convention: str) -> dict:
    """canonical plane-sum multiset -> [#even perms, #odd perms]"""
    groups: dict = defaultdict(lambda: [0, 0])
    for sign, vec in _signed_vectors(alpha, convention):
        groups[contingency._canon_vec(vec)][0 if sign > 0 else 1] += 1
    return dict(groups)


def _padded_triple(alpha, beta, gamma):
    alpha, beta, gamma, n = _triple(alpha, beta, gamma)
    ell = max(len(alpha), len(beta), len(gamma), 1)
    return alpha.padded(ell), beta.padded(ell), gamma.padded(ell), ell


def table_terms(alpha, beta, gamma, convention: str = SHIFT_CONVENTION) -> Iterator[tuple]:
    """
    Literal term list: (sign, a, b, c) for all (sigma1, sigma2, sigma3) in S_ell^3,
    including terms whose count is zero.  Only sensible for small ell.
    """
    a0, b0, c0, ell = _padded_triple(alpha, beta, gamma)
    perms = [(p, _sign(p)) for p in permutations(range(1, ell + 1))]
    for p1, s1 in perms:
        a = shifted_marginals(a0, p1, convention)
        for p2, s2 in perms:
            b = shifted_marginals(b0, p2, convention)
            for p3, s3 in perms:
                yield s1 * s2 * s3, a, b, shifted_marginals(c0, p3, convention)


@dataclass(frozen=True)
class GappPair:
    """g = pos - neg, both sides counting contingency arrays."""
    pos: int
    neg: int

    @property
    def value(self) -> int:
        return self.pos - self.neg


def gapp_decomposition(alpha, beta, gamma, convention: str = SHIFT_CONVENTION,
                       threads: int = 1) -> GappPair:
    """
    Split the permutation-triple sum by the sign of sgn(sigma1 sigma2 sigma3).

    Terms are grouped by the canonical multiset of each shifted vector (the
    count only depends on that), so each distinct contingency count is
    evaluated once and multiplied by the number of even/odd triples hitting it.
    """
    a0, b0, c0, _ = _padded_triple(alpha, beta, gamma)
    ga, gb, gc = _grouped(a0, convention), _grouped(b0, convention), _grouped(c0, convention)
    jobs = [(ka, kb, kc) for ka in ga for kb in gb for kc in gc]

    def count(key):
        ka, kb, kc = key
        return contingency._count3(*contingency._canon3(ka, kb, kc))

    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            counts = list(pool.map(count, jobs))
    else:
        counts = [count(j) for j in jobs]

    pos = neg = 0
    for (ka, kb, kc), c in zip(jobs, counts):
        if not c:
            continue
        (ae, ao), (be, bo), (ce, co) = ga[ka], gb[kb], gc[kc]
        even = ae * be * ce + ae * bo * co + ao * be * co + ao * bo * ce
        odd = ao * bo * co + ao * be * ce + ae * bo * ce + ae * be * co
        pos += even * c
        neg += odd * c
    return GappPair(pos, neg)


def kron_via_tables(alpha, beta, gamma, convention: str = SHIFT_CONVENTION,
                    threads: int = 1) -> int:
    return gapp_decomposition(alpha, beta, gamma, convention, threads).value


# -- vanishing and reduction ---------------------------------------------------

def dvir_vanishing(lam, mu, nu) -> bool:
    """True when some role assignment has l(a) l(b) < l(c), which forces g = 0."""
    lam, mu, nu, _ = _triple(lam, mu, nu)
    a, b, c = len(lam), len(mu), len(nu)
    return a * b < c or a * c < b or b * c < a


@dataclass(frozen=True)
class ReductionMap:
    """
    The partition-shrinking map attached to (lam, mu) and a slack t.

    With omega = lam u mu and rho = lam n mu padded to ell rows, the cut set is
    I = {i <= ell : rho_i >= omega_{i+1} + t} u {ell + 1}; row j belongs to the
    block ending at i_j = min{i in I : i >= j}, and
    phi(theta)_j = theta_j - rho_{i_j} + t (ell - i_j + ind(i_j)).
    """
    t: int
    ell: int
    omega: Partition
    rho: Partition
    cuts: tuple

    @classmethod
    def from_pair(cls, lam, mu, t: int, ell: Optional[int] = None) -> "ReductionMap":
        lam, mu = Partition(lam), Partition(mu)
        if ell is None:
            ell = max(len(lam), len(mu))
        omega, rho = union(lam, mu), intersect(lam, mu)
        cuts = tuple(i for i in range(1, ell + 1) if rho.part(i) >= omega.part(i + 1) + t)
        return cls(t, ell, omega, rho, cuts + (ell + 1,))

    def ind(self, i: int) -> int:
        if i == self.ell + 1:
            return 1
        return sum(1 for c in self.cuts if i <= c <= self.ell)

    def block_end(self, j: int) -> int:
        return min(c for c in self.cuts if c >= j)

    def offsets(self) -> tuple:
        """phi(theta)_j - theta_j for j = 1..ell."""
        out = []
        for j in range(1, self.ell + 1):
            i = self.block_end(j)
            out.append(-self.rho.part(i) + self.t * (self.ell - i + self.ind(i)))
        return tuple(out)

    def __call__(self, theta) -> Partition:
        theta = Partition(theta)
        if len(theta) > self.ell:
            raise InputError(f"{theta} has more than {self.ell} parts")
        if any(theta.part(j) + self.t < self.rho.part(j) for j in range(1, self.ell + 1)):
            raise InputError(f"phi undefined: rho = {self.rho} is not inside {theta} + t^ell")
        return Partition(theta.part(j) + off for j, off in enumerate(self.offsets(), 1))


@dataclass(frozen=True)
class ProvablyZero:
    index: int      # 1-based row with |lam_i - mu_i| > t
    t: int

    kind = "zero"


@dataclass(frozen=True)
class Reduced:
    lam: Partition
    mu: Partition
    nu: Partition
    t: int
    omega: Partition
    rho: Partition
    cuts: tuple
    ell: int

    kind = "reduced"

    @property
    def size(self) -> int:
        return self.lam.size()


ReductionOutcome = Union[ProvablyZero, Reduced]


class ReductionError(InvariantError):
    def __init__(self, message, certificate):
        super().__init__(f"{message}; certificate: {certificate}")
        self.certificate = certificate


def reduce(lam, mu, nu) -> ReductionOutcome:
    lam, mu, nu, n = _triple(lam, mu, nu)
    ell = max(len(lam), len(mu), len(nu), 1)
    t = n - nu.part(1)
    for i in range(1, ell + 1):
        if abs(lam.part(i) - mu.part(i)) > t:
            return ProvablyZero(i, t)
    phi = ReductionMap.from_pair(lam, mu, t, ell)
    cert = {"lam": str(lam), "mu": str(mu), "nu": str(nu), "t": t, "ell": ell,
            "omega": str(phi.omega), "rho": str(phi.rho), "I": phi.cuts}
    try:
        plam, pmu = phi(lam), phi(mu)
    except InputError as exc:
        raise ReductionError(f"phi(lam) or phi(mu) is not a partition ({exc})", cert) from None
    r = plam.size()
    if pmu.size() != r:
        raise ReductionError(f"|phi(lam)| = {r} != |phi(mu)| = {pmu.size()}", cert)
    if r - t < nu.part(2):
        raise ReductionError(f"phi(nu) = ({r - t}, {nu[1:]}) is not a partition", cert)
    pnu = Partition((r - t,) + tuple(nu[1:]))
    return Reduced(plam, pmu, pnu, t, phi.omega, phi.rho, phi.cuts, ell)


# -- pipeline ------------------------------------------------------------------

@dataclass
class Route:
    """How ``compute`` arrived at its answer (reported by the CLI)."""
    method: str
    steps: list = field(default_factory=list)

    def __str__(self):
        return self.method if not self.steps else f"{self.method}:" + ">".join(self.steps)


def assign_roles(lam, mu, nu) -> tuple:
    """Reorder so the partition with the smallest second part comes last (first wins ties)."""
    triple = [Partition(lam), Partition(mu), Partition(nu)]
    k = min(range(3), key=lambda i: (triple[i].part(2), i))
    rest = [p for i, p in enumerate(triple) if i != k]
    return rest[0], rest[1], triple[k]


def compute_with_route(lam, mu, nu, method: str = "auto", *, oracle_max_n: int = ORACLE_MAX_N,
                       oracle_min_length: int = ORACLE_MIN_LENGTH, conjugate_pair: bool = False,
                       threads: int = 1) -> tuple:
    lam, mu, nu, n = _triple(lam, mu, nu)
    if method == "oracle":
        return kron_via_characters(lam, mu, nu), Route("oracle")
    if method == "tables":
        return kron_via_tables(lam, mu, nu, threads=threads), Route("tables")
    if method != "auto":
        raise InputError(f"unknown method {method!r}; expected one of {METHODS}")

    route = Route("auto")
    lam, mu, nu = assign_roles(lam, mu, nu)
    if conjugate_pair:
        # g(lam', mu', nu) = g(lam, mu, nu); nu keeps its small second part
        lam, mu = conjugate(lam), conjugate(mu)
        route.steps.append("conjugate")
    if dvir_vanishing(lam, mu, nu):
        route.steps.append("dvir")
        return 0, route
    outcome = reduce(lam, mu, nu)
    if isinstance(outcome, ProvablyZero):
        route.steps.append("reduce-zero")
        return 0, route
    if outcome.size <= n:
        lam, mu, nu, n = outcome.lam, outcome.mu, outcome.nu, outcome.size
        route.steps.append("reduce")
    else:
        # phi only guarantees a size bound of 2 t ell^2; below that it can grow
        route.steps.append("reduce-skipped")
    ell = max(len(lam), len(mu), len(nu))
    if n <= oracle_max_n and ell >= oracle_min_length:
        route.steps.append("oracle")
        return kron_via_characters(lam, mu, nu), route
    route.steps.append("tables")
    return kron_via_tables(lam, mu, nu, threads=threads), route


def compute(lam, mu, nu, method: str = "auto", **options) -> int:
    return compute_with_route(lam, mu, nu, method, **options)[0]


# -- reduced Kronecker coefficients -------------------------------------------

def stable_n(lam, mu, nu) -> int:
    """
    Smallest n from which g((n-|lam|, lam), ...) is guaranteed stable, after
    sorting roles so that |nu| <= |mu| <= |lam|.
    """
    big, mid, small = sorted((Partition(lam), Partition(mu), Partition(nu)),
                             key=lambda p: p.size(), reverse=True)
    return max(big.part(1), mid.part(1)) + small.size() + big.size()


def pad_first_row(p, n: int) -> Partition:
    p = Partition(p)
    head = n - p.size()
    if head < p.part(1):
        raise InputError(f"n = {n} too small to prepend a first row to {p}")
    return Partition((head,) + tuple(p))


def reduced_kron(lam, mu, nu, method: str = "auto", n: Optional[int] = None) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if n is None:
        n = stable_n(lam, mu, nu)
    return compute(pad_first_row(lam, n), pad_first_row(mu, n), pad_first_row(nu, n), method)
