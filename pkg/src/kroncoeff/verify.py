"""
Cross-method verification suites behind ``kroncoeff verify``.

Every suite walks its cases in increasing size, compares independent
computations and stops at the first disagreement, so the reported
counterexample is a smallest one in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Optional

from . import contingency, hooks, kron, lr
from .characters import chi, chi_two_row
from .partitions import Partition, centralizer_order, conjugate, partitions_of

HARD_CAP = 8

# per-suite size ceilings; beyond these a suite stops growing with max_n
SWITCH_MAX = 6
CONTINGENCY_MAX_ENTRY = 4
REDKRON_MAX = 4
HOOK_MAX = 8


@dataclass
class SuiteResult:
    name: str
    checked: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        line = f"{status} {self.name}: {self.checked} checks"
        if not self.ok:
            line += f"; counterexample {self.counterexample}"
        return line


class _Fail(Exception):
    pass


class _Counter:
    def __init__(self):
        self.n = 0

    def check(self, ok: bool, what: Callable[[], str]):
        self.n += 1
        if not ok:
            raise _Fail(what())


def _triples(max_n):
    for n in range(1, max_n + 1):
        ps = list(partitions_of(n))
        for lam, mu, nu in product(ps, repeat=3):
            yield n, lam, mu, nu


def _fmt(*ps) -> str:
    return "(" + "; ".join(str(Partition(p)) for p in ps) + ")"


def suite_characters(max_n, c):
    for n in range(1, max_n + 1):
        ps = list(partitions_of(n))
        for rho in ps:
            norm = sum(chi(lam, rho) ** 2 for lam in ps)
            c.check(norm == centralizer_order(rho), lambda: f"column norm at rho={rho}")
            for lam in ps:
                if len(lam) <= 2:
                    v = chi_two_row(n, lam.part(2), rho)
                    c.check(v == chi(lam, rho), lambda: _fmt(lam, rho))


def suite_kron(max_n, c):
    for n, lam, mu, nu in _triples(max_n):
        g = kron.kron_via_characters(lam, mu, nu)
        c.check(kron.kron_via_tables(lam, mu, nu) == g, lambda: "tables " + _fmt(lam, mu, nu))
        c.check(kron.compute(lam, mu, nu) == g, lambda: "auto " + _fmt(lam, mu, nu))


def suite_symmetry(max_n, c):
    for n, lam, mu, nu in _triples(max_n):
        g = kron.kron_via_characters(lam, mu, nu)
        for p in permutations((lam, mu, nu)):
            c.check(kron.kron_via_characters(*p) == g, lambda: "permuted " + _fmt(*p))
        lc, mc = conjugate(lam), conjugate(mu)
        c.check(kron.kron_via_characters(lc, mc, nu) == g, lambda: "conjugated " + _fmt(lam, mu, nu))
        pair = kron.gapp_decomposition(lam, mu, nu)
        c.check(pair.pos >= 0 and pair.neg >= 0 and pair.value == g,
                lambda: f"gapp {pair} " + _fmt(lam, mu, nu))


def suite_reduction(max_n, c):
    for n, lam, mu, nu in _triples(max_n):
        if 2 * nu.part(1) < n:
            continue
        g = kron.kron_via_characters(lam, mu, nu)
        out = kron.reduce(lam, mu, nu)
        if out.kind == "zero":
            c.check(g == 0, lambda: "zero " + _fmt(lam, mu, nu))
        else:
            t = n - nu.part(1)
            c.check(out.size <= 2 * t * out.ell ** 2, lambda: "size bound " + _fmt(lam, mu, nu))
            c.check(kron.kron_via_characters(out.lam, out.mu, out.nu) == g,
                    lambda: "reduced " + _fmt(lam, mu, nu))


def suite_contingency(max_n, c):
    top = min(max_n, CONTINGENCY_MAX_ENTRY)
    seen = set()
    for ell in range(1, 4 if top else 1):
        vecs = list(product(range(top + 1), repeat=ell))
        for a, b, cc in product(vecs, repeat=3):
            if not sum(a) == sum(b) == sum(cc):
                continue
            v = contingency.count_tables(a, b, cc)
            for p in permutations((a, b, cc)):
                c.check(contingency.count_tables(*p) == v, lambda: f"roles {p}")
            key = contingency._canon3(a, b, cc)
            if key not in seen:
                seen.add(key)
                naive = contingency.count_tables_naive(a, b, cc, max_total=3 * top)
                c.check(naive == v, lambda: f"naive {a} {b} {cc}")


def suite_hooks(max_n, c):
    for n in range(1, min(max_n, HOOK_MAX) + 1):
        ps = list(partitions_of(n))
        for lam, mu in product(ps, repeat=2):
            for k in range(n):
                hook = Partition((n - k,) + (1,) * k)
                want = kron.kron_via_characters(lam, mu, hook)
                c.check(hooks.count_hook_kron(lam, mu, k) == want,
                        lambda: f"k={k} " + _fmt(lam, mu, hook))


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def suite_switching(max_n, c):
    for n in range(1, min(max_n, SWITCH_MAX) + 1):
        for shape in partitions_of(n):
            for content in _compositions(n):
                for k in range(n + 1):
                    images = set()
                    for T in hooks.small_barred_tableaux(shape, content, k):
                        S = hooks.tableau_switch(T)
                        c.check(S == hooks.switch_naive(T), lambda: f"naive {T}")
                        c.check(S.shape == T.shape and S.content() == T.content(),
                                lambda: f"shape/content {T}")
                        c.check(S not in images, lambda: f"not injective at {T}")
                        images.add(S)


def suite_lr(max_n, c):
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            for a in range(n + 1):
                for mu in partitions_of(a):
                    for nu in partitions_of(n - a):
                        v = lr.lr_coefficient(lam, mu, nu)
                        c.check(lr.lr_coefficient(lam, nu, mu) == v, lambda: "symmetry " + _fmt(lam, mu, nu))
                        c.check(lr.lr_via_reduction(lam, mu, nu) == v, lambda: "reduction " + _fmt(lam, mu, nu))
                        c.check(kron.reduced_kron(lam, mu, nu) == v, lambda: "reduced kron " + _fmt(lam, mu, nu))
    for r in range(min(max_n, 3) + 1):
        for pi in partitions_of(r):
            for s in range(min(max_n, 4) + 1):
                strips = lr.pieri_expand(s, pi)
                for eta in partitions_of(r + s):
                    want = 1 if eta in strips else 0
                    c.check(lr.lr_coefficient(eta, (s,), pi) == want, lambda: "pieri " + _fmt(eta, (s,), pi))


def suite_redkron(max_n, c):
    ps = [p for m in range(min(max_n, REDKRON_MAX) + 1) for p in partitions_of(m)]
    for lam, mu, nu in product(ps, repeat=3):
        n = kron.stable_n(lam, mu, nu)
        v = kron.reduced_kron(lam, mu, nu, n=n)
        for m in range(n + 1, n + 4):
            c.check(kron.reduced_kron(lam, mu, nu, n=m) == v, lambda: f"n={m} " + _fmt(lam, mu, nu))


def suite_littlewood(max_n, c):
    for n in range(1, max_n + 1):
        ps = list(partitions_of(n))
        for r in range(min(n, 2) + 1):
            for pi in partitions_of(r):
                for lam, mu in product(ps, repeat=2):
                    c.check(lr.littlewood_side(lam, mu, pi) == lr.pieri_side(lam, mu, pi),
                            lambda: f"pi={pi} " + _fmt(lam, mu))


SUITES = [
    ("characters", suite_characters),
    ("kron-methods", suite_kron),
    ("kron-symmetry-gapp", suite_symmetry),
    ("reduction", suite_reduction),
    ("contingency", suite_contingency),
    ("hooks", suite_hooks),
    ("switching", suite_switching),
    ("lr", suite_lr),
    ("reduced-kron", suite_redkron),
    ("littlewood", suite_littlewood),
]


def run_suite(name, fn, max_n) -> SuiteResult:
    c = _Counter()
    try:
        fn(max_n, c)
    except _Fail as exc:
        return SuiteResult(name, c.n, str(exc))
    return SuiteResult(name, c.n)


def run_all(max_n: int, report=print) -> list:
    results = []
    for name, fn in SUITES:
        res = run_suite(name, fn, max_n)
        report(str(res))
        results.append(res)
    return results
